//! Submodules of `Z4^m` in Howell normal form.
//!
//! Vectors are stored bit-sliced: one bit plane for the low bit and one for
//! the high bit of every entry, 64 entries per word. Over Z4 the Howell form
//! is an echelon basis whose pivots are 1 or 2, with entries above a pivot 1
//! cleared and entries above a pivot 2 reduced to `{0, 1}`, and with the
//! property that the rows vanishing on the first `j` coordinates span the
//! submodule of vectors vanishing there. It is unique for each submodule,
//! so two matrices span the same module iff their Howell forms are equal.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("vector of width {got} does not match module width {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("module has 2^{log2_size} elements, above the enumeration cap {cap}")]
    CapExceeded { log2_size: u32, cap: u64 },
}

/// A vector in `Z4^width`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z4Vector {
    width: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Z4Vector {
    pub fn zeros(width: usize) -> Self {
        let words = width.div_ceil(64);
        Z4Vector { width, lo: vec![0; words], hi: vec![0; words] }
    }

    /// Entries are read mod 4.
    pub fn from_entries(entries: &[u8]) -> Self {
        let mut v = Self::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.width, "index {i} out of range for width {}", self.width);
        let (w, b) = (i / 64, i % 64);
        (((self.lo[w] >> b) & 1) | (((self.hi[w] >> b) & 1) << 1)) as u8
    }

    pub fn set(&mut self, i: usize, e: u8) {
        assert!(i < self.width, "index {i} out of range for width {}", self.width);
        let (w, b) = (i / 64, i % 64);
        let m = 1u64 << b;
        self.lo[w] = (self.lo[w] & !m) | (((e & 1) as u64) << b);
        self.hi[w] = (self.hi[w] & !m) | ((((e >> 1) & 1) as u64) << b);
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.width).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&w| w == 0)
    }

    /// The first nonzero coordinate and its value.
    pub fn first_nonzero(&self) -> Option<(usize, u8)> {
        let w = (0..self.lo.len()).find(|&w| self.lo[w] | self.hi[w] != 0)?;
        let i = w * 64 + (self.lo[w] | self.hi[w]).trailing_zeros() as usize;
        Some((i, self.get(i)))
    }

    /// The bit planes `(lo, hi)` when the vector fits in a single word.
    pub fn single_word(&self) -> Option<(u64, u64)> {
        (self.width <= 64).then(|| (self.lo.first().copied().unwrap_or(0), self.hi.first().copied().unwrap_or(0)))
    }

    pub fn add_assign(&mut self, o: &Z4Vector) {
        debug_assert_eq!(self.width, o.width);
        for w in 0..self.lo.len() {
            let carry = self.lo[w] & o.lo[w];
            self.lo[w] ^= o.lo[w];
            self.hi[w] ^= o.hi[w] ^ carry;
        }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &Z4Vector, c: u8) {
        match c & 3 {
            0 => {}
            1 => self.add_assign(o),
            2 => {
                for w in 0..self.lo.len() {
                    self.hi[w] ^= o.lo[w];
                }
            }
            _ => self.add_assign(&o.scale(3)),
        }
    }

    pub fn scale(&self, c: u8) -> Z4Vector {
        let mut out = Z4Vector::zeros(self.width);
        match c & 3 {
            0 => {}
            1 => out = self.clone(),
            2 => out.hi.copy_from_slice(&self.lo),
            _ => {
                out.lo.copy_from_slice(&self.lo);
                for w in 0..self.lo.len() {
                    out.hi[w] = self.hi[w] ^ self.lo[w];
                }
            }
        }
        out
    }

    /// Coordinates `range` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> Z4Vector {
        let mut out = Z4Vector::zeros(len);
        for i in 0..len {
            out.set(i, self.get(start + i));
        }
        out
    }

    pub fn concat(&self, other: &Z4Vector) -> Z4Vector {
        let mut e = self.entries();
        e.extend(other.entries());
        Z4Vector::from_entries(&e)
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector{:?}", self.entries())
    }
}

impl Serialize for Z4Vector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

/// A list of generators of a submodule of `Z4^width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Matrix {
    width: usize,
    rows: Vec<Z4Vector>,
}

impl Z4Matrix {
    pub fn new(width: usize) -> Self {
        Z4Matrix { width, rows: Vec::new() }
    }

    pub fn from_rows(width: usize, rows: Vec<Z4Vector>) -> Result<Self, ModuleError> {
        let mut m = Z4Matrix::new(width);
        for r in rows {
            m.push(r)?;
        }
        Ok(m)
    }

    pub fn push(&mut self, row: Z4Vector) -> Result<(), ModuleError> {
        if row.width != self.width {
            return Err(ModuleError::WidthMismatch { expected: self.width, got: row.width });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn howellize(&self) -> HowellForm {
        HowellForm::new(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pivot {
    pub col: usize,
    /// 1 or 2.
    pub value: u8,
}

/// The Howell normal form of a submodule of `Z4^width`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HowellForm {
    width: usize,
    rows: Vec<Z4Vector>,
    pivots: Vec<Pivot>,
}

impl HowellForm {
    pub fn new(m: &Z4Matrix) -> Self {
        let width = m.width;
        let mut pending: Vec<Z4Vector> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..width {
            if pending.is_empty() {
                break;
            }
            let idx = pending
                .iter()
                .position(|r| r.get(col) & 1 == 1)
                .or_else(|| pending.iter().position(|r| r.get(col) == 2));
            let Some(idx) = idx else { continue };
            let mut piv = pending.swap_remove(idx);
            if piv.get(col) == 3 {
                piv = piv.scale(3);
            }
            let value = piv.get(col);
            for r in pending.iter_mut() {
                let e = r.get(col);
                if e != 0 {
                    // With a pivot 2 every entry in this column is even.
                    let q = if value == 1 { e } else { e / 2 };
                    r.add_scaled(&piv, 4 - q);
                }
            }
            if value == 2 {
                let d = piv.scale(2);
                if !d.is_zero() {
                    pending.push(d);
                }
            }
            pending.retain(|r| !r.is_zero());
            rows.push(piv);
            pivots.push(Pivot { col, value });
        }
        debug_assert!(pending.is_empty());
        for (k, &Pivot { col, value }) in pivots.iter().enumerate() {
            let (above, rest) = rows.split_at_mut(k);
            let pr = &rest[0];
            for r in above.iter_mut() {
                let e = r.get(col);
                let q = if value == 1 { e } else { e / 2 };
                if q != 0 {
                    r.add_scaled(pr, 4 - q);
                }
            }
        }
        HowellForm { width, rows, pivots }
    }

    /// The zero submodule of `Z4^width`.
    pub fn zero(width: usize) -> Self {
        HowellForm { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[Pivot] {
        &self.pivots
    }

    fn check_width(&self, v: &Z4Vector) -> Result<(), ModuleError> {
        if v.width == self.width {
            Ok(())
        } else {
            Err(ModuleError::WidthMismatch { expected: self.width, got: v.width })
        }
    }

    /// Reduces `v` against the rows, returning the remainder and the
    /// multipliers used. The remainder is zero iff `v` is in the module.
    pub fn reduce(&self, v: &Z4Vector) -> Result<(Z4Vector, Vec<u8>), ModuleError> {
        self.check_width(v)?;
        let mut r = v.clone();
        let mut coeffs = vec![0u8; self.rows.len()];
        for (k, (row, p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let e = r.get(p.col);
            let q = if p.value == 1 { e } else { e / 2 };
            if q != 0 {
                r.add_scaled(row, 4 - q);
                coeffs[k] = q;
            }
        }
        Ok((r, coeffs))
    }

    pub fn contains(&self, v: &Z4Vector) -> Result<bool, ModuleError> {
        Ok(self.reduce(v)?.0.is_zero())
    }

    /// Multipliers `c` with `sum c_k * row_k = v`, or `None` if `v` is not
    /// in the module.
    pub fn certificate(&self, v: &Z4Vector) -> Result<Option<Vec<u8>>, ModuleError> {
        let (r, c) = self.reduce(v)?;
        Ok(r.is_zero().then_some(c))
    }

    /// `sum c_k * row_k`.
    pub fn combine(&self, coeffs: &[u8]) -> Z4Vector {
        let mut v = Z4Vector::zeros(self.width);
        for (row, &c) in self.rows.iter().zip(coeffs) {
            v.add_scaled(row, c);
        }
        v
    }

    /// The order of each row in the quotient: 4 for pivot 1, 2 for pivot 2.
    pub fn row_orders(&self) -> impl Iterator<Item = u8> + '_ {
        self.pivots.iter().map(|p| if p.value == 1 { 4 } else { 2 })
    }

    /// `log2` of the number of elements.
    pub fn log2_size(&self) -> u32 {
        self.pivots.iter().map(|p| if p.value == 1 { 2 } else { 1 }).sum()
    }

    /// The number of elements, if it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        let l = self.log2_size();
        (l < 128).then(|| 1u128 << l)
    }

    /// Every element exactly once, provided there are at most `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<Enumerate<'_>, ModuleError> {
        let l = self.log2_size();
        if l >= 64 || (1u64 << l) > cap {
            return Err(ModuleError::CapExceeded { log2_size: l, cap });
        }
        Ok(Enumerate {
            form: self,
            digits: vec![0; self.rows.len()],
            orders: self.row_orders().collect(),
            current: Some(Z4Vector::zeros(self.width)),
        })
    }

    /// Rows vanishing on coordinates `0..k`, restricted to `k..width`.
    ///
    /// By the Howell property these span the submodule of elements that
    /// vanish on the first `k` coordinates.
    pub fn tail_after(&self, k: usize) -> HowellForm {
        let mut m = Z4Matrix::new(self.width - k);
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if p.col >= k {
                m.push(row.slice(k, self.width - k)).expect("width");
            }
        }
        m.howellize()
    }

    /// The projection onto coordinates `0..k`.
    pub fn head(&self, k: usize) -> HowellForm {
        let mut m = Z4Matrix::new(k);
        for row in &self.rows {
            m.push(row.slice(0, k)).expect("width");
        }
        m.howellize()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Iterator over the elements of a [`HowellForm`].
pub struct Enumerate<'a> {
    form: &'a HowellForm,
    digits: Vec<u8>,
    orders: Vec<u8>,
    current: Option<Z4Vector>,
}

impl Iterator for Enumerate<'_> {
    type Item = Z4Vector;

    fn next(&mut self) -> Option<Z4Vector> {
        let out = self.current.take()?;
        let mut v = out.clone();
        let mut j = 0;
        loop {
            if j == self.digits.len() {
                return Some(out);
            }
            let row = &self.form.rows[j];
            v.add_assign(row);
            self.digits[j] += 1;
            if self.digits[j] == self.orders[j] {
                self.digits[j] = 0;
                v.add_scaled(row, 4 - (self.orders[j] & 3));
                j += 1;
                continue;
            }
            break;
        }
        self.current = Some(v);
        Some(out)
    }
}
