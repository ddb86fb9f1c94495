//! Knot tables: one `name<TAB>pd` per line, `#` starts a comment.

use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub pd: String,
}

pub fn parse_table(text: &str) -> Result<Vec<TableEntry>> {
    let mut out: Vec<TableEntry> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((name, pd)) = line.split_once('\t') else {
            bail!("line {}: expected `name<TAB>pd`", n + 1);
        };
        let name = name.trim();
        if out.iter().any(|e| e.name == name) {
            bail!("line {}: duplicate name `{}`", n + 1, name);
        }
        out.push(TableEntry { name: name.to_string(), pd: pd.trim().to_string() });
    }
    Ok(out)
}

pub fn read_table(path: &Path) -> Result<Vec<TableEntry>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_table(&text).with_context(|| format!("in {}", path.display()))
}

pub fn lookup<'a>(table: &'a [TableEntry], name: &str) -> Result<&'a TableEntry> {
    match table.iter().find(|e| e.name == name) {
        Some(e) => Ok(e),
        None => bail!("no knot named `{}` in the table", name),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_table("# knots\n\n3_1\tX[1,4,2,5] X[3,6,4,1] X[5,2,6,3]  # left-handed\n0_1\t\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].pd, "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        assert_eq!(lookup(&t, "0_1").unwrap().pd, "");
        assert!(lookup(&t, "4_1").is_err());
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_table("3_1 X[1,4,2,5]").is_err());
        assert!(parse_table("a\tO(1)\na\tO(1)").is_err());
    }
}
