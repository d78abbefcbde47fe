//! Dyck, Schröder and marked Dyck paths with their statistics.

pub mod dyck;
pub mod marked;
pub mod partition;
pub mod schroder;

use std::fmt;

use crate::error::{Error, Result};

pub use dyck::{enumerate_dyck, DyckPath, Slicing};
pub use marked::{enumerate_marked, marked_count, narayana, MarkedDyckPath};
pub use partition::Partition;
pub use schroder::{enumerate_schroder, SchroderPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::D => 'D',
        }
    }
}

pub(crate) fn parse_word(word: &str) -> Result<Vec<Step>> {
    word.chars()
        .map(|c| match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            'D' => Ok(Step::D),
            _ => Err(Error::Parse(format!("unknown step {c:?}"))),
        })
        .collect()
}

pub(crate) fn word_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}
