//! Exact sparse linear algebra over arbitrary-precision rationals: rank,
//! quotient basis extraction and span-membership certificates, with a mod-p
//! backend used to cross-check ranks.

use crate::{Error, Rational, Result};
#[cfg(test)]
use crate::rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};

pub const DENSE_COL_CUTOFF: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Rational,
    ModP(u64),
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::ModP(p) => write!(f, "mod{p}"),
        }
    }
}

/// Row-major sparse matrix; each row holds (col, value) sorted by column
/// with no explicit zeros.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub n_cols: usize,
    pub rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(n_cols: usize) -> SparseMatrix {
        SparseMatrix { n_cols, rows: Vec::new() }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, Rational)>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|&(c, _)| c);
        for &(c, _) in &row {
            assert!(c < self.n_cols, "column index out of range");
        }
        self.rows.push(row);
    }

    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        entries: &[(usize, usize, Rational)],
    ) -> Result<SparseMatrix> {
        let mut rows: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n_rows];
        for (r, c, v) in entries {
            if *r >= n_rows || *c >= n_cols {
                return Err(Error::Argument(format!("entry ({r},{c}) out of range")));
            }
            let e = rows[*r].entry(*c).or_insert_with(Rational::zero);
            *e += v;
        }
        let mut m = SparseMatrix::new(n_cols);
        for row in rows {
            m.push_row(row.into_iter().collect());
        }
        Ok(m)
    }

    pub fn rank(&self, backend: Backend) -> usize {
        match backend {
            Backend::Rational => {
                if self.n_cols < DENSE_COL_CUTOFF {
                    self.rank_dense()
                } else {
                    self.rank_sparse()
                }
            }
            Backend::ModP(p) => self.rank_modp(p).expect("prime divides a denominator"),
        }
    }

    /// Rational rank cross-checked against `n_primes` random 62-bit primes.
    pub fn rank_checked(&self, n_primes: usize, seed: u64) -> Result<usize> {
        let rank = self.rank(Backend::Rational);
        let mut rng = seed;
        let mut checked = 0;
        let mut guard = 0;
        while checked < n_primes {
            guard += 1;
            if guard > 1000 {
                return Err(Error::Resource("could not find usable primes".into()));
            }
            let p = random_prime_62(&mut rng);
            match self.rank_modp(p) {
                Some(rp) => {
                    if rp != rank {
                        return Err(Error::RankMismatch { rational: rank, modp: rp, prime: p });
                    }
                    checked += 1;
                }
                None => continue, // prime divides a denominator, try another
            }
        }
        Ok(rank)
    }

    /// Dense fraction-free style elimination, column order left to right.
    fn rank_dense(&self) -> usize {
        let mut rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| {
                let mut dense = vec![Rational::zero(); self.n_cols];
                for (c, v) in r {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.n_cols {
            let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = rows[rank][col].recip();
            for c in col..self.n_cols {
                let v = std::mem::replace(&mut rows[rank][c], Rational::zero());
                rows[rank][c] = v * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in col..self.n_cols {
                        let delta = &rows[rank][c] * &factor;
                        rows[r][c] -= delta;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Sparse elimination with Markowitz-style pivot selection: among the
    /// sparsest unprocessed rows, pick the entry whose column count is
    /// smallest, ties broken by (row, col) for determinism.
    fn rank_sparse(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, Rational>> = self
            .rows
            .iter()
            .map(|r| r.iter().cloned().collect())
            .collect();
        let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
        let mut rank = 0;
        loop {
            // column occupancy among active rows
            let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
            for (i, row) in rows.iter().enumerate() {
                if active[i] {
                    for &c in row.keys() {
                        *col_count.entry(c).or_insert(0) += 1;
                    }
                }
            }
            // pick pivot minimizing (row_len - 1) * (col_count - 1)
            let mut best: Option<(usize, usize, usize)> = None; // (score, row, col)
            for (i, row) in rows.iter().enumerate() {
                if !active[i] {
                    continue;
                }
                for &c in row.keys() {
                    let score = (row.len() - 1) * (col_count[&c] - 1);
                    let cand = (score, i, c);
                    if best.map_or(true, |b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            let Some((_, pr, pc)) = best else { break };
            let pivot_row = rows[pr].clone();
            let pivot_val = pivot_row[&pc].clone();
            active[pr] = false;
            rank += 1;
            for (i, row) in rows.iter_mut().enumerate() {
                if !active[i] {
                    continue;
                }
                if let Some(v) = row.get(&pc).cloned() {
                    let factor = v / &pivot_val;
                    for (c, pv) in &pivot_row {
                        let delta = pv * &factor;
                        let e = row.entry(*c).or_insert_with(Rational::zero);
                        *e -= delta;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                    if row.is_empty() {
                        active[i] = false;
                    }
                }
            }
        }
        rank
    }

    /// Rank over GF(p).  Returns None if p divides some denominator.
    pub fn rank_modp(&self, p: u64) -> Option<usize> {
        let mut rows: Vec<BTreeMap<usize, u64>> = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut row = BTreeMap::new();
            for (c, v) in r {
                let x = rational_modp(v, p)?;
                if x != 0 {
                    row.insert(*c, x);
                }
            }
            rows.push(row);
        }
        let mut rank = 0;
        for col in 0..self.n_cols {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r].contains_key(&col)) else {
                continue;
            };
            rows.swap(rank, piv);
            let pivot_row = rows[rank].clone();
            let inv = inv_modp(pivot_row[&col], p);
            for i in rank + 1..rows.len() {
                if let Some(&v) = rows[i].get(&col) {
                    let factor = mul_modp(v, inv, p);
                    let row = &mut rows[i];
                    for (c, pv) in &pivot_row {
                        let delta = mul_modp(*pv, factor, p);
                        let e = row.entry(*c).or_insert(0);
                        *e = (*e + p - delta) % p;
                        if *e == 0 {
                            row.remove(c);
                        }
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        Some(rank)
    }

    /// Echelonize with leftmost-column pivoting; returns pivot columns and
    /// free columns (a basis of the quotient by the row span).
    pub fn quotient_basis(&self) -> (Vec<usize>, Vec<usize>) {
        let ech = Echelon::build(self, false);
        let pivots: Vec<usize> = ech.rows.iter().map(|r| r.pivot).collect();
        let free = (0..self.n_cols).filter(|c| !pivots.contains(c)).collect();
        (pivots, free)
    }

    /// Span membership: coefficients over the original rows reproducing `v`
    /// exactly, or None if v is not in the row span.  The returned
    /// certificate is re-verified by exact multiplication.
    pub fn member(&self, v: &[(usize, Rational)]) -> Option<Certificate> {
        let ech = Echelon::build(self, true);
        let mut residual: BTreeMap<usize, Rational> = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (*c, x.clone()))
            .collect();
        let mut combo: BTreeMap<usize, Rational> = BTreeMap::new();
        for row in &ech.rows {
            if let Some(x) = residual.get(&row.pivot).cloned() {
                let factor = x / &row.vec[&row.pivot];
                for (c, rv) in &row.vec {
                    let delta = rv * &factor;
                    let e = residual.entry(*c).or_insert_with(Rational::zero);
                    *e -= delta;
                    if e.is_zero() {
                        residual.remove(c);
                    }
                }
                for (orig, cv) in row.combo.as_ref().unwrap() {
                    let delta = cv * &factor;
                    let e = combo.entry(*orig).or_insert_with(Rational::zero);
                    *e += delta;
                    if e.is_zero() {
                        combo.remove(orig);
                    }
                }
            }
        }
        if !residual.is_empty() {
            return None;
        }
        let cert = Certificate { coefficients: combo };
        debug_assert!(cert.verify(self, v));
        if !cert.verify(self, v) {
            return None;
        }
        Some(cert)
    }

    // -----------------------------------------------------------------
    // plain-text coordinate format: header "rows cols nnz", entries
    // "r c num/den"
    // -----------------------------------------------------------------

    pub fn export<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{} {} {}", self.n_rows(), self.n_cols, self.nnz())?;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                writeln!(w, "{} {} {}/{}", r, c, v.numer(), v.denom())?;
            }
        }
        Ok(())
    }

    /// Export with each row scaled by the least common denominator so all
    /// entries are integers.
    pub fn export_integer_scaled<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{} {} {}", self.n_rows(), self.n_cols, self.nnz())?;
        for (r, row) in self.rows.iter().enumerate() {
            let mut lcd = BigInt::one();
            for (_, v) in row {
                lcd = lcd.lcm(v.denom());
            }
            for (c, v) in row {
                let scaled = v * Rational::from_integer(lcd.clone());
                debug_assert!(scaled.denom().is_one());
                writeln!(w, "{} {} {}", r, c, scaled.numer())?;
            }
        }
        Ok(())
    }

    pub fn import<R: BufRead>(reader: &mut R) -> Result<SparseMatrix> {
        let mut header = String::new();
        reader.read_line(&mut header)?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse("matrix header must be `rows cols nnz`".into()));
        }
        let n_rows: usize = parts[0].parse().map_err(|_| Error::Parse("bad row count".into()))?;
        let n_cols: usize = parts[1].parse().map_err(|_| Error::Parse("bad col count".into()))?;
        let nnz: usize = parts[2].parse().map_err(|_| Error::Parse("bad nnz".into()))?;
        let mut entries = Vec::with_capacity(nnz);
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let p: Vec<&str> = line.split_whitespace().collect();
            if p.len() != 3 {
                return Err(Error::Parse(format!("bad entry line `{line}`")));
            }
            let r: usize = p[0].parse().map_err(|_| Error::Parse("bad row index".into()))?;
            let c: usize = p[1].parse().map_err(|_| Error::Parse("bad col index".into()))?;
            let v = parse_rational(p[2])?;
            entries.push((r, c, v));
        }
        if entries.len() != nnz {
            return Err(Error::Parse(format!(
                "nnz mismatch: header says {nnz}, found {}",
                entries.len()
            )));
        }
        SparseMatrix::from_triplets(n_rows, n_cols, &entries)
    }

    pub fn export_string(&self) -> String {
        let mut buf = Vec::new();
        self.export(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
    let d: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Coefficients over original row indices with sum(coeff * row) equal to the
/// certified vector.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub coefficients: BTreeMap<usize, Rational>,
}

impl Certificate {
    pub fn verify(&self, m: &SparseMatrix, v: &[(usize, Rational)]) -> bool {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (row, coeff) in &self.coefficients {
            for (c, rv) in &m.rows[*row] {
                let e = acc.entry(*c).or_insert_with(Rational::zero);
                *e += rv * coeff;
            }
        }
        for (c, x) in v {
            if x.is_zero() {
                continue;
            }
            match acc.get(c) {
                Some(a) if a == x => {
                    acc.remove(c);
                }
                _ => return false,
            }
        }
        acc.values().all(|x| x.is_zero())
    }
}

struct EchRow {
    pivot: usize,
    vec: BTreeMap<usize, Rational>,
    combo: Option<BTreeMap<usize, Rational>>,
}

struct Echelon {
    rows: Vec<EchRow>, // sorted by pivot column
}

impl Echelon {
    fn build(m: &SparseMatrix, track: bool) -> Echelon {
        let mut ech: Vec<EchRow> = Vec::new();
        for (i, row) in m.rows.iter().enumerate() {
            let mut vec: BTreeMap<usize, Rational> = row.iter().cloned().collect();
            let mut combo: Option<BTreeMap<usize, Rational>> = if track {
                let mut c = BTreeMap::new();
                c.insert(i, Rational::one());
                Some(c)
            } else {
                None
            };
            loop {
                let Some((&lead, _)) = vec.iter().next() else { break };
                match ech.iter().position(|r| r.pivot == lead) {
                    Some(j) => {
                        let factor = &vec[&lead] / &ech[j].vec[&lead];
                        let (evec, ecombo) = (&ech[j].vec, &ech[j].combo);
                        for (c, rv) in evec {
                            let delta = rv * &factor;
                            let e = vec.entry(*c).or_insert_with(Rational::zero);
                            *e -= delta;
                            if e.is_zero() {
                                vec.remove(c);
                            }
                        }
                        if let (Some(co), Some(eco)) = (combo.as_mut(), ecombo.as_ref()) {
                            for (orig, cv) in eco {
                                let delta = cv * &factor;
                                let e = co.entry(*orig).or_insert_with(Rational::zero);
                                *e -= delta;
                                if e.is_zero() {
                                    co.remove(orig);
                                }
                            }
                        }
                    }
                    None => {
                        ech.push(EchRow { pivot: lead, vec, combo });
                        break;
                    }
                }
            }
        }
        ech.sort_by_key(|r| r.pivot);
        Echelon { rows: ech }
    }
}

// ---------------------------------------------------------------------------
// mod-p arithmetic
// ---------------------------------------------------------------------------

fn mul_modp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_modp(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_modp(acc, base, p);
        }
        base = mul_modp(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_modp(a: u64, p: u64) -> u64 {
    pow_modp(a, p - 2, p)
}

fn bigint_modp(x: &BigInt, p: u64) -> u64 {
    let m = (x % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn rational_modp(v: &Rational, p: u64) -> Option<u64> {
    let den = bigint_modp(v.denom(), p);
    if den == 0 {
        return None;
    }
    let num = bigint_modp(v.numer(), p);
    Some(mul_modp(num, inv_modp(den, p), p))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_modp(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_modp(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic splitmix-style stream of 62-bit primes.
pub fn random_prime_62(state: &mut u64) -> u64 {
    loop {
        *state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^= z >> 31;
        let candidate = (z >> 2) | (1 << 61) | 1; // odd, 62 bits
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(entries: &[(usize, usize, i64)], rows: usize, cols: usize) -> SparseMatrix {
        let trips: Vec<(usize, usize, Rational)> =
            entries.iter().map(|&(r, c, v)| (r, c, rat(v))).collect();
        SparseMatrix::from_triplets(rows, cols, &trips).unwrap()
    }

    #[test]
    fn rank_trivial() {
        assert_eq!(m(&[], 3, 4).rank(Backend::Rational), 0);
        let id = m(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)], 3, 3);
        assert_eq!(id.rank(Backend::Rational), 3);
    }

    #[test]
    fn rank_dense_vs_sparse_vs_modp() {
        let mat = m(
            &[
                (0, 0, 1),
                (0, 1, 2),
                (0, 2, 3),
                (1, 0, 2),
                (1, 1, 4),
                (1, 2, 6),
                (2, 1, 1),
                (2, 3, 5),
                (3, 0, 1),
                (3, 3, -5),
                (3, 2, 3),
            ],
            4,
            4,
        );
        let dense = mat.rank_dense();
        let sparse = mat.rank_sparse();
        assert_eq!(dense, sparse);
        assert_eq!(dense, 3);
        let mut seed = 7;
        for _ in 0..3 {
            let p = random_prime_62(&mut seed);
            assert_eq!(mat.rank_modp(p).unwrap(), 3);
        }
        assert_eq!(mat.rank_checked(2, 42).unwrap(), 3);
    }

    #[test]
    fn quotient_basis_cases() {
        let empty = m(&[], 0, 4);
        assert_eq!(empty.quotient_basis(), (vec![], vec![0, 1, 2, 3]));
        let id = m(&[(0, 0, 1), (1, 1, 1)], 2, 2);
        assert_eq!(id.quotient_basis(), (vec![0, 1], vec![]));
        let mat = m(&[(0, 0, 1), (0, 1, 1), (1, 0, 2), (1, 1, 2)], 2, 3);
        let (piv, free) = mat.quotient_basis();
        assert_eq!(piv, vec![0]);
        assert_eq!(free, vec![1, 2]);
    }

    #[test]
    fn member_cases() {
        let mat = m(&[(0, 0, 1), (0, 1, 1), (1, 1, 2)], 2, 3);
        // a row of the matrix is certified with a unit coefficient
        let cert = mat.member(&[(0, rat(1)), (1, rat(1))]).unwrap();
        assert_eq!(cert.coefficients.len(), 1);
        assert_eq!(cert.coefficients[&0], rat(1));
        // zero vector gets an empty certificate
        let cert = mat.member(&[]).unwrap();
        assert!(cert.coefficients.is_empty());
        // e_0 is in the span, e_2 is not
        assert!(mat.member(&[(0, rat(1))]).is_some());
        assert!(mat.member(&[(2, rat(1))]).is_none());
    }

    #[test]
    fn roundtrip_formats() {
        let mat = m(&[(0, 0, 1), (0, 2, -3), (1, 1, 7)], 2, 3);
        let text = mat.export_string();
        assert!(text.starts_with("2 3 3"));
        let back = SparseMatrix::import(&mut text.as_bytes()).unwrap();
        assert_eq!(back.rank(Backend::Rational), mat.rank(Backend::Rational));
        // integer-scaled export of a fractional matrix
        let mut frac = SparseMatrix::new(2);
        frac.push_row(vec![(0, Rational::new(1.into(), 2.into())), (1, Rational::new(1.into(), 3.into()))]);
        let mut buf = Vec::new();
        frac.export_integer_scaled(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.contains("0 0 3"));
        assert!(s.contains("0 1 2"));
        let back = SparseMatrix::import(&mut s.as_bytes()).unwrap();
        assert_eq!(back.rank(Backend::Rational), 1);
    }

    #[test]
    fn primes_are_prime() {
        let mut seed = 1;
        for _ in 0..5 {
            let p = random_prime_62(&mut seed);
            assert!(is_prime_u64(p));
            assert!(p > (1 << 61));
        }
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to few bases
    }
}
