//! Resumable long trajectories. A run only watches for death, keeping the
//! current word and counters, and can write them to a checkpoint file at a
//! fixed step interval so a very long job survives interruption.
//!
//! File layout, little-endian:
//!
//! ```text
//! magic     8 bytes  "SFTAGCK\0"
//! version   u32      1
//! rules     u64      TagRules::fingerprint
//! alphabet  u32
//! steps     u64
//! max_len   u64
//! length    u64      symbols in the word
//! word      packed symbols, width bits each, first symbol in the low bits
//! ```

use std::fs;
use std::io::Write;
use std::path::Path;

use super::accel::{Fast, Track};
use super::word::symbol_width;
use super::{step_in_place, TagError, TagRules, TagWord};

const MAGIC: &[u8; 8] = b"SFTAGCK\0";
const VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongRunStatus {
    Died { steps: u64 },
    /// Stopped at the requested step count with the word still alive.
    Paused { steps: u64, len: u64 },
}

#[derive(Debug, Clone)]
pub struct LongRun {
    rules: TagRules,
    word: TagWord,
    steps: u64,
    max_len: u64,
}

impl LongRun {
    pub fn new(start: &TagWord, rules: &TagRules) -> Self {
        Self { rules: rules.clone(), word: start.clone(), steps: 0, max_len: start.len() as u64 }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn max_len(&self) -> u64 {
        self.max_len
    }

    pub fn word(&self) -> &TagWord {
        &self.word
    }

    /// Runs until the word dies or `until` total steps have been taken,
    /// writing a checkpoint to `checkpoint.0` every `checkpoint.1` steps.
    pub fn run(&mut self, until: u64, checkpoint: Option<(&Path, u64)>) -> Result<LongRunStatus, TagError> {
        let fast = Fast::new(&self.rules).ok();
        while self.steps < until && !self.word.is_empty() {
            let mut target = until;
            if let Some((_, every)) = checkpoint {
                let every = every.max(1);
                target = target.min((self.steps / every + 1) * every);
            }
            let todo = target - self.steps;
            match &fast {
                Some(fast) => {
                    let mut track = Track::new(self.word.len() as u64, u64::MAX);
                    fast.advance_by(&mut self.word, todo, &mut track);
                    self.steps += track.index;
                    self.max_len = self.max_len.max(track.max_len);
                }
                None => {
                    for _ in 0..todo {
                        if self.word.is_empty() {
                            break;
                        }
                        step_in_place(&mut self.word, &self.rules)?;
                        self.steps += 1;
                        self.max_len = self.max_len.max(self.word.len() as u64);
                    }
                }
            }
            if let Some((path, every)) = checkpoint {
                if self.steps.is_multiple_of(every.max(1)) || self.word.is_empty() {
                    self.save(path)?;
                }
            }
        }
        Ok(self.status())
    }

    pub fn status(&self) -> LongRunStatus {
        if self.word.is_empty() {
            LongRunStatus::Died { steps: self.steps }
        } else {
            LongRunStatus::Paused { steps: self.steps, len: self.word.len() as u64 }
        }
    }

    /// Writes the checkpoint atomically (temporary file, then rename).
    pub fn save(&self, path: &Path) -> Result<(), TagError> {
        let io = |e: std::io::Error| TagError::Checkpoint(e.to_string());
        let mut out = Vec::with_capacity(48 + self.word.len() / 8);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&self.rules.fingerprint().to_le_bytes());
        out.extend_from_slice(&self.rules.alphabet().to_le_bytes());
        out.extend_from_slice(&self.steps.to_le_bytes());
        out.extend_from_slice(&self.max_len.to_le_bytes());
        out.extend_from_slice(&(self.word.len() as u64).to_le_bytes());
        out.extend(pack(&self.word.symbols(), symbol_width(self.rules.alphabet())));
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(&out).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }

    /// Reads a checkpoint written for the same rules.
    pub fn load(path: &Path, rules: &TagRules) -> Result<Self, TagError> {
        let bad = |m: &str| TagError::Checkpoint(m.to_string());
        let data = fs::read(path).map_err(|e| TagError::Checkpoint(e.to_string()))?;
        if data.len() < 48 || &data[..8] != MAGIC {
            return Err(bad("not a tag checkpoint"));
        }
        let u32_at = |i: usize| u32::from_le_bytes(data[i..i + 4].try_into().unwrap());
        let u64_at = |i: usize| u64::from_le_bytes(data[i..i + 8].try_into().unwrap());
        if u32_at(8) != VERSION {
            return Err(bad("unsupported checkpoint version"));
        }
        if u64_at(12) != rules.fingerprint() || u32_at(20) != rules.alphabet() {
            return Err(bad("checkpoint was written for different rules"));
        }
        let (steps, max_len, len) = (u64_at(24), u64_at(32), u64_at(40) as usize);
        let width = symbol_width(rules.alphabet());
        let body = &data[48..];
        if body.len() != (len * width as usize).div_ceil(8) {
            return Err(bad("truncated word"));
        }
        let symbols = unpack(body, width, len);
        if symbols.iter().any(|&s| s as u32 >= rules.alphabet()) {
            return Err(bad("symbol outside the alphabet"));
        }
        let word = TagWord::from_symbols(rules.alphabet(), &symbols);
        Ok(Self { rules: rules.clone(), word, steps, max_len })
    }
}

fn pack(symbols: &[u8], width: u32) -> Vec<u8> {
    let mut out = vec![0u8; (symbols.len() * width as usize).div_ceil(8)];
    for (i, &s) in symbols.iter().enumerate() {
        let bit = i * width as usize;
        out[bit / 8] |= s << (bit % 8);
    }
    out
}

fn unpack(bytes: &[u8], width: u32, len: usize) -> Vec<u8> {
    let mask = ((1u16 << width) - 1) as u8;
    (0..len)
        .map(|i| {
            let bit = i * width as usize;
            (bytes[bit / 8] >> (bit % 8)) & mask
        })
        .collect()
}
