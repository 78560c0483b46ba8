//! Reading graphs from a file, standard input or an inline graph6 string.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use defcol_core::iso::MAX_CANON_ORDER;
use defcol_core::{parse_graph6, Graph};

use crate::CliError;

/// One parsed input line.
pub struct Line {
    pub text: String,
    pub graph: Graph,
}

/// `source` is `-` for standard input, an existing path, or graph6 text.
pub fn read_graphs(source: Option<&str>) -> Result<Vec<Line>, CliError> {
    let text = match source {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io("stdin".into(), e))?;
            s
        }
        Some(p) if Path::new(p).is_file() => fs::read_to_string(p).map_err(|e| CliError::Io(p.into(), e))?,
        Some(inline) => inline.to_string(),
    };
    parse_lines(&text)
}

pub fn parse_lines(text: &str) -> Result<Vec<Line>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        let graph = parse_graph6(t).map_err(|e| CliError::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        if graph.order() > MAX_CANON_ORDER {
            return Err(CliError::Parse {
                line: i + 1,
                message: format!("order {} exceeds {MAX_CANON_ORDER}", graph.order()),
            });
        }
        out.push(Line {
            text: t.to_string(),
            graph,
        });
    }
    Ok(out)
}
