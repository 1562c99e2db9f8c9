//! Plain-text spiral files: one isomer per line, the atom count followed by
//! twelve pentagon positions. Lines starting with `#` are comments.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

use super::SpiralSequence;

pub fn read_spirals(reader: impl BufRead) -> Result<Vec<SpiralSequence>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let spiral = trimmed.parse().map_err(|e: Error| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(spiral);
    }
    Ok(out)
}

/// Writes `header` lines as comments, then one record per spiral.
pub fn write_spirals<'a>(
    mut writer: impl Write,
    header: &[String],
    spirals: impl IntoIterator<Item = &'a SpiralSequence>,
) -> std::io::Result<()> {
    for h in header {
        writeln!(writer, "# {h}")?;
    }
    for s in spirals {
        writeln!(writer, "{s}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_comments() {
        let text = "# comment\n60 1 7 9 11 13 15 18 20 22 24 26 32\n\n  # indented\n20 1 2 3 4 5 6 7 8 9 10 11 12\n";
        let spirals = read_spirals(text.as_bytes()).unwrap();
        assert_eq!(spirals.len(), 2);
        let mut buf = Vec::new();
        write_spirals(&mut buf, &["hdr".to_string()], &spirals).unwrap();
        let again = read_spirals(buf.as_slice()).unwrap();
        assert_eq!(again, spirals);
        assert!(String::from_utf8(buf).unwrap().starts_with("# hdr\n"));
    }

    #[test]
    fn bad_line_reports_line_number() {
        let err = read_spirals("# x\n60 1 2 3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
