use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use clap::ValueEnum;
use superdom::graph::{EdgeListReader, Graph6Reader};
use superdom::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

pub type Records = Box<dyn Iterator<Item = (usize, Result<Graph, GraphError>)>>;

/// Records from a file, from stdin when the path is `-`, or from an inline
/// record. Inline edge lists may use `;` in place of newlines.
pub fn open(path: Option<&Path>, inline: Option<&str>, format: Format) -> io::Result<Records> {
    let reader: Box<dyn BufRead> = match (path, inline) {
        (_, Some(text)) => {
            let text = match format {
                Format::Edgelist => text.replace(';', "\n"),
                Format::Graph6 => text.to_string(),
            };
            Box::new(io::Cursor::new(text.into_bytes()))
        }
        (Some(p), None) if p == Path::new("-") => Box::new(BufReader::new(io::stdin())),
        (Some(p), None) => Box::new(BufReader::new(File::open(p)?)),
        (None, None) => {
            return Err(io::Error::new(io::ErrorKind::InvalidInput, "give an input path, '-' or --inline"))
        }
    };
    Ok(match format {
        Format::Graph6 => Box::new(Graph6Reader::new(reader)),
        Format::Edgelist => Box::new(EdgeListReader::new(reader)),
    })
}
