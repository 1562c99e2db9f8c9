use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use fullerene_core::{Error, Result};
use serde::Serialize;

use crate::args::Format;

/// Tool version and invocation, carried by every report.
#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub invocation: String,
}

impl Meta {
    pub fn from_env() -> Meta {
        let args: Vec<String> = std::env::args().skip(1).collect();
        let mut invocation = String::from("fullerene");
        for a in args {
            invocation.push(' ');
            if a.is_empty() || a.contains(char::is_whitespace) {
                invocation.push_str(&format!("{a:?}"));
            } else {
                invocation.push_str(&a);
            }
        }
        Meta {
            tool: "fullerene",
            version: env!("CARGO_PKG_VERSION"),
            invocation,
        }
    }

    pub fn comment(&self) -> String {
        format!("# {} {}: {}\n", self.tool, self.version, self.invocation)
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    meta: &'a Meta,
    #[serde(flatten)]
    body: &'a T,
}

/// Report destination.
pub struct Sink {
    pub format: Format,
    pub meta: Meta,
    buf: Vec<u8>,
}

impl Sink {
    pub fn new(format: Format) -> Sink {
        Sink {
            format,
            meta: Meta::from_env(),
            buf: Vec::new(),
        }
    }

    /// Header comment plus the given comment lines, then a CSV body.
    pub fn csv(&mut self, comments: &[String], write: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
        self.buf.extend_from_slice(self.meta.comment().as_bytes());
        for c in comments {
            self.buf.extend_from_slice(format!("# {c}\n").as_bytes());
        }
        write(&mut self.buf)
    }

    /// CSV rows from serializable records.
    pub fn csv_records<T: Serialize>(&mut self, comments: &[String], records: &[T]) -> Result<()> {
        self.csv(comments, |buf| {
            let mut w = csv::Writer::from_writer(buf);
            for r in records {
                w.serialize(r)?;
            }
            w.flush().map_err(csv::Error::from)?;
            Ok(())
        })
    }

    pub fn json<T: Serialize>(&mut self, body: &T) -> Result<()> {
        let envelope = Envelope { meta: &self.meta, body };
        serde_json::to_writer_pretty(&mut self.buf, &envelope)
            .map_err(|e| Error::DomainError(format!("JSON encoding: {e}")))?;
        self.buf.push(b'\n');
        Ok(())
    }

    pub fn finish(self, out: Option<&Path>) -> Result<()> {
        let io_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source: io::Error| Error::Io { path, source }
        };
        match out {
            Some(path) => {
                let file = File::create(path).map_err(io_err(path))?;
                let mut w = BufWriter::new(file);
                w.write_all(&self.buf).and_then(|_| w.flush()).map_err(io_err(path))
            }
            None => {
                let mut stdout = io::stdout().lock();
                stdout
                    .write_all(&self.buf)
                    .and_then(|_| stdout.flush())
                    .map_err(io_err(Path::new("<stdout>")))
            }
        }
    }
}
