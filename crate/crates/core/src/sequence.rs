use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite complex sequence on the centered support `[-N/2, N/2]`, `N` even.
///
/// Values are stored contiguously; index `n` lives at offset `n + N/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    n_half: usize,
    values: Vec<Complex64>,
}

impl Sequence {
    /// Build a sequence from its values listed from `n = -N/2` to `n = N/2`.
    /// The length must be odd and at least 3.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        let len = values.len();
        if len % 2 == 0 || len < 3 {
            return Err(Error::EvenSequenceLength(len));
        }
        let n_half = (len - 1) / 2;
        if let Some(i) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFiniteValue {
                index: i as isize - n_half as isize,
            });
        }
        Ok(Self { n_half, values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The all-zero sequence with support parameter `n` (must be even, >= 2).
    pub fn zeros(n: usize) -> Result<Self> {
        check_support(n)?;
        Ok(Self {
            n_half: n / 2,
            values: vec![Complex64::new(0.0, 0.0); n + 1],
        })
    }

    /// Unit impulse at `n = 0` with support parameter `n`.
    pub fn impulse(n: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        s.values[n / 2] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Build from `(index, value)` pairs. Indices must cover `-k..=k` exactly
    /// once for some `k >= 1`, in any order.
    pub fn from_indexed<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let mut pairs: Vec<(i64, Complex64)> = pairs.into_iter().collect();
        pairs.sort_by_key(|p| p.0);
        let len = pairs.len();
        if len % 2 == 0 || len < 3 {
            return Err(Error::EvenSequenceLength(len));
        }
        let k = ((len - 1) / 2) as i64;
        for (pos, (idx, _)) in pairs.iter().enumerate() {
            if *idx != pos as i64 - k {
                return Err(Error::IndexCoverage {
                    half: k,
                    found: *idx,
                    position: pos,
                });
            }
        }
        Self::new(pairs.into_iter().map(|p| p.1).collect())
    }

    /// `N`, the even support parameter.
    pub fn n(&self) -> usize {
        2 * self.n_half
    }

    /// `N/2`.
    pub fn n_half(&self) -> usize {
        self.n_half
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Support indices `-N/2..=N/2`.
    pub fn indices(&self) -> RangeInclusive<isize> {
        let h = self.n_half as isize;
        -h..=h
    }

    /// Value at index `n`; zero outside the support.
    pub fn get(&self, n: isize) -> Complex64 {
        let h = self.n_half as isize;
        if n < -h || n > h {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[(n + h) as usize]
        }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `(n, value)` pairs over the support.
    pub fn iter(&self) -> impl Iterator<Item = (isize, Complex64)> + '_ {
        self.indices().zip(self.values.iter().copied())
    }

    /// `Σ |r[n]|²`.
    pub fn energy(&self) -> f64 {
        crate::numeric::compensated_sum(self.values.iter().map(|v| v.norm_sqr()))
    }

    /// `Σ |r[n]|`.
    pub fn l1_norm(&self) -> f64 {
        crate::numeric::compensated_sum(self.values.iter().map(|v| v.norm()))
    }

    /// Scale by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            n_half: self.n_half,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Copy normalized to unit energy. Fails on a zero sequence.
    pub fn normalized(&self) -> Result<Self> {
        let e = self.energy();
        if e == 0.0 {
            return Err(Error::ZeroEnergy);
        }
        Ok(self.scaled(Complex64::new(1.0 / e.sqrt(), 0.0)))
    }

    /// Two-fold zero-insertion upsampling `r↑2`: `out[2n] = r[n]`, odd
    /// samples zero, support `[-N, N]`.
    pub fn upsample2(&self) -> Sequence {
        let zero = Complex64::new(0.0, 0.0);
        let mut values = vec![zero; 2 * self.values.len() - 1];
        for (k, v) in self.values.iter().enumerate() {
            values[2 * k] = *v;
        }
        Sequence {
            n_half: 2 * self.n_half,
            values,
        }
    }
}

pub(crate) fn check_support(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        Err(Error::InvalidSupport(n))
    } else {
        Ok(())
    }
}
