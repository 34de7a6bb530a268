use std::fmt;

/// A word over a small alphabet, packed `width` bits per symbol into 64-bit
/// limbs and used as a queue: symbols are read and deleted at the front and
/// appended at the back. Binary words take one bit per symbol.
#[derive(Clone)]
pub struct TagWord {
    width: u32,
    limbs: Vec<u64>,
    /// Bit positions of the first symbol and one past the last.
    head: u64,
    tail: u64,
}

/// Bits per symbol for an alphabet of size `m`; always a divisor of 64 so a
/// symbol never straddles two limbs.
pub(crate) fn symbol_width(m: u32) -> u32 {
    assert!((2..=256).contains(&m), "alphabet size must be between 2 and 256");
    let bits = 32 - (m - 1).leading_zeros();
    bits.next_power_of_two()
}

impl TagWord {
    /// The empty word for an alphabet of size `m`.
    pub fn empty(m: u32) -> Self {
        Self { width: symbol_width(m), limbs: Vec::new(), head: 0, tail: 0 }
    }

    pub fn from_symbols(m: u32, symbols: &[u8]) -> Self {
        let mut w = Self::empty(m);
        for &s in symbols {
            assert!((s as u32) < m, "symbol {s} outside alphabet of size {m}");
            w.push(s);
        }
        w
    }

    /// Parses a binary word such as `"100100"`.
    pub fn binary(text: &str) -> Option<Self> {
        let symbols: Option<Vec<u8>> = text
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        Some(Self::from_symbols(2, &symbols?))
    }

    pub fn len(&self) -> usize {
        ((self.tail - self.head) / self.width as u64) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.head == self.tail
    }

    pub fn get(&self, i: usize) -> u8 {
        let pos = self.head + i as u64 * self.width as u64;
        let mask = (1u64 << self.width) - 1;
        ((self.limbs[(pos / 64) as usize] >> (pos % 64)) & mask) as u8
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn symbols(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn push(&mut self, s: u8) {
        self.append_bits(s as u64, self.width);
    }

    /// Appends the low `n` bits of `bits` (`n <= 64`), lowest bit first.
    pub(crate) fn append_bits(&mut self, bits: u64, n: u32) {
        if n == 0 {
            return;
        }
        let bits = if n == 64 { bits } else { bits & ((1u64 << n) - 1) };
        let (limb, off) = ((self.tail / 64) as usize, (self.tail % 64) as u32);
        if limb >= self.limbs.len() {
            self.limbs.push(0);
        }
        self.limbs[limb] |= bits << off;
        if off + n > 64 {
            self.limbs.push(bits >> (64 - off));
        }
        self.tail += n as u64;
    }

    /// Sixty-four bits starting `offset` bits after the head, zero-padded
    /// past the tail.
    pub(crate) fn bits_at(&self, offset: u64) -> u64 {
        let pos = self.head + offset;
        let (limb, off) = ((pos / 64) as usize, (pos % 64) as u32);
        let lo = self.limbs.get(limb).copied().unwrap_or(0) >> off;
        let hi = if off == 0 { 0 } else { self.limbs.get(limb + 1).copied().unwrap_or(0) << (64 - off) };
        let word = lo | hi;
        let avail = self.tail.saturating_sub(pos);
        if avail >= 64 {
            word
        } else {
            word & ((1u64 << avail) - 1)
        }
    }

    /// Deletes `n` symbols from the front (all of them if fewer remain).
    pub fn drop_front(&mut self, n: usize) {
        let bits = (n as u64 * self.width as u64).min(self.tail - self.head);
        self.head += bits;
        if self.head == self.tail {
            self.limbs.clear();
            self.head = 0;
            self.tail = 0;
        } else if self.head >= 4096 && self.head * 4 >= self.tail {
            let whole = (self.head / 64) as usize;
            self.limbs.drain(..whole);
            self.head -= whole as u64 * 64;
            self.tail -= whole as u64 * 64;
        }
    }

    /// Number of packed bits in the word.
    pub(crate) fn bit_len(&self) -> u64 {
        self.tail - self.head
    }
}

impl PartialEq for TagWord {
    fn eq(&self, other: &Self) -> bool {
        if self.width != other.width || self.bit_len() != other.bit_len() {
            return false;
        }
        (0..self.bit_len()).step_by(64).all(|off| self.bits_at(off) == other.bits_at(off))
    }
}

impl Eq for TagWord {}

impl fmt::Display for TagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for s in self.symbols() {
            if self.width == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s},")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TagWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        assert_eq!(symbol_width(2), 1);
        assert_eq!(symbol_width(3), 2);
        assert_eq!(symbol_width(4), 2);
        assert_eq!(symbol_width(5), 4);
        assert_eq!(symbol_width(17), 8);
        assert_eq!(symbol_width(256), 8);
    }

    #[test]
    fn queue_behaviour() {
        let mut w = TagWord::binary("1000").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.first(), Some(1));
        w.drop_front(3);
        assert_eq!(w.to_string(), "0");
        w.drop_front(5);
        assert!(w.is_empty());
        assert_eq!(w.to_string(), "ε");
    }

    #[test]
    fn equality_ignores_alignment() {
        let mut a = TagWord::binary("111").unwrap();
        for _ in 0..200 {
            a.push(1);
            a.push(0);
        }
        a.drop_front(3);
        let mut b = TagWord::empty(2);
        for _ in 0..200 {
            b.push(1);
            b.push(0);
        }
        assert_eq!(a, b);
        b.push(0);
        assert_ne!(a, b);
    }

    #[test]
    fn long_queue_compacts() {
        let mut w = TagWord::empty(3);
        for i in 0..20_000u32 {
            w.push((i % 3) as u8);
            if i % 2 == 1 {
                w.drop_front(1);
            }
        }
        assert_eq!(w.len(), 10_000);
        assert!(w.limbs.len() <= 10_000 * 2 / 64 + 80);
        assert_eq!(w.get(0), (10_000 % 3) as u8);
    }
}
