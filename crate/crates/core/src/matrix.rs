//! Dense matrices over GF(2^m).

use std::fmt;
use std::sync::Arc;

use crate::error::CodeError;
use crate::field::{FieldContext, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
    field: Arc<FieldContext>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixGF {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.q()
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| format!("{e:x}")).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn new(
        field: Arc<FieldContext>,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, CodeError> {
        if entries.len() != rows * cols {
            return Err(CodeError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            field.element(e.value() as u32)?;
        }
        Ok(MatrixGF {
            rows,
            cols,
            entries,
            field,
        })
    }

    pub fn zeros(field: Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
            field,
        }
    }

    pub fn identity(field: Arc<FieldContext>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix from raw integer rows; every row must have the same length.
    pub fn from_rows(field: Arc<FieldContext>, rows: &[Vec<u32>]) -> Result<Self, CodeError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(CodeError::Shape("ragged rows".into()));
            }
            for &v in row {
                entries.push(field.element(v)?);
            }
        }
        Ok(MatrixGF {
            rows: rows.len(),
            cols,
            entries,
            field,
        })
    }

    /// Builds a matrix column by column.
    pub fn from_columns(
        field: Arc<FieldContext>,
        rows: usize,
        columns: &[Vec<FieldElement>],
    ) -> Result<Self, CodeError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(CodeError::Shape(format!(
                    "column {c} has {} entries",
                    col.len()
                )));
            }
            for (r, &v) in col.iter().enumerate() {
                m.field.element(v.value() as u32)?;
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn select_columns(&self, cols: &[usize]) -> MatrixGF {
        let mut out = Self::zeros(self.field.clone(), self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn append_column(&self, col: &[FieldElement]) -> Result<MatrixGF, CodeError> {
        if col.len() != self.rows {
            return Err(CodeError::Shape("appended column has wrong height".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for (r, &c) in col.iter().enumerate() {
            entries.extend_from_slice(self.row(r));
            entries.push(c);
        }
        MatrixGF::new(self.field.clone(), self.rows, self.cols + 1, entries)
    }

    pub fn scale_row(&mut self, r: usize, s: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// `row[dst] += s * row[src]`.
    fn add_scaled_row(&mut self, dst: usize, src: usize, s: FieldElement) {
        for c in 0..self.cols {
            let v = self.get(dst, c).add(self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref_with_pivots(&self) -> (MatrixGF, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            if p != lead {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, lead * m.cols + j);
                }
            }
            let inv = m.field.inv(m.get(lead, c)).expect("pivot is nonzero");
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, c);
                    if !factor.is_zero() {
                        m.add_scaled_row(r, lead, factor);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> MatrixGF {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Nonzero rows of the RREF, i.e. a canonical basis of the row space.
    pub fn row_space_basis(&self) -> MatrixGF {
        let (r, pivots) = self.rref_with_pivots();
        let k = pivots.len();
        MatrixGF {
            rows: k,
            cols: self.cols,
            entries: r.entries[..k * self.cols].to_vec(),
            field: self.field.clone(),
        }
    }

    /// Basis of `{x : M x^T = 0}`, one vector per row.
    pub fn null_space(&self) -> MatrixGF {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.field.clone(), free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, FieldElement::ONE);
            // characteristic 2: -a = a
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, r.get(pr, f));
            }
        }
        out
    }

    /// `message · M` for a row vector `message` of length `rows`.
    pub fn left_mul(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(message.len(), self.rows);
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &a) in message.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = o.add(self.field.mul(a, g));
            }
        }
        out
    }

    /// Text form: `rows cols m modulus_hex` then row-major hex entries.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {} {} {:#x}\n",
            self.rows,
            self.cols,
            self.field.m(),
            self.field.modulus()
        );
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| format!("{e:x}")).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<MatrixGF, CodeError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CodeError::Parse("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [rows, cols, m, modulus] = fields[..] else {
            return Err(CodeError::Parse(format!("bad header {header:?}")));
        };
        let dec = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| CodeError::Parse(format!("{s:?}: {e}")))
        };
        let (rows, cols, m) = (dec(rows)?, dec(cols)?, dec(m)? as u32);
        let modulus = parse_hex(modulus)?;
        let field = Arc::new(FieldContext::new(m, Some(modulus))?);
        let entries = lines
            .flat_map(str::split_whitespace)
            .map(|tok| Ok(field.element(parse_hex(tok)?)?))
            .collect::<Result<Vec<_>, CodeError>>()?;
        MatrixGF::new(field, rows, cols, entries)
    }
}

/// Parses hex with or without a `0x` prefix.
pub fn parse_hex(s: &str) -> Result<u32, CodeError> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u32::from_str_radix(digits, 16).map_err(|e| CodeError::Parse(format!("{s:?}: {e}")))
}
