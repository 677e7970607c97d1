//! Discrete prolate spheroidal sequences.
//!
//! A DPSS set with parameters `(M, W′)` holds the `M` eigenvectors of the
//! symmetric Toeplitz kernel `K(n, m) = 2W′·sinc(2W′(n − m))` on the centered
//! index range `−(M−1)/2 ..= (M−1)/2`, ordered by decreasing eigenvalue.
//!
//! The kernel's eigenvalues cluster exponentially close to 1 and to 0, so a
//! dense eigensolver cannot separate the corresponding eigenvectors. The
//! vectors are taken instead from the symmetric tridiagonal matrix that
//! commutes with `K`, whose eigenvalues are spaced roughly one unit apart;
//! each eigenvalue `λ_l` is then the Rayleigh quotient `s_lᵀ K s_l`.
//! Eigenvalues therefore carry an *absolute* error of a few ulps of 1, which
//! is the only resolution at which orderings or ties are meaningful.
//!
//! Each vector is sign-canonicalized: its first entry (scanning from the
//! most negative index) with magnitude above `1e-10·max|s|` is positive.

use crate::error::{Error, Result};
use crate::linalg::symmetric_tridiagonal_eigen;
use crate::numeric::{compensated_sum, cos_pi, sin_pi};
use crate::sequence::{check_support, Sequence};

/// Largest DPSS length accepted by [`compute_dpss`].
pub const DEFAULT_MAX_LENGTH: usize = 8193;

/// Relative gap below which two tridiagonal eigenvalues count as tied.
pub const TIE_THRESHOLD: f64 = 1e-13;

/// Entries smaller than this fraction of the largest one are ignored when
/// picking a vector's sign.
pub const SIGN_THRESHOLD: f64 = 1e-10;

/// Parameters of a DPSS set: odd length `M >= 3` and half-bandwidth
/// `W′ ∈ (0, 0.5)` in cycles per sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DpssParams {
    length: usize,
    half_bandwidth: f64,
}

impl DpssParams {
    pub fn new(length: usize, half_bandwidth: f64) -> Result<Self> {
        if length < 3 || length % 2 == 0 {
            return Err(Error::InvalidLength(length));
        }
        if !(half_bandwidth > 0.0 && half_bandwidth < 0.5) {
            return Err(Error::DpssBandwidthOutOfRange(half_bandwidth));
        }
        Ok(Self { length, half_bandwidth })
    }

    /// `(2N+3, 0.25)`, the set behind the half-sample results.
    pub fn half_sample_family(n: usize) -> Result<Self> {
        check_support(n)?;
        Self::new(2 * n + 3, 0.25)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn half_bandwidth(&self) -> f64 {
        self.half_bandwidth
    }

    /// `(M − 1)/2`: indices run over `−half_length ..= half_length`.
    pub fn half_length(&self) -> usize {
        (self.length - 1) / 2
    }

    /// `Some(N)` when the parameters are `(2N+3, 0.25)` with `N` even.
    pub fn family_order(&self) -> Option<usize> {
        if self.half_bandwidth != 0.25 || self.length < 7 {
            return None;
        }
        let n = (self.length - 3) / 2;
        (n % 2 == 0).then_some(n)
    }

    /// Kernel value `K(d) = 2W′·sinc(2W′d)`.
    pub fn kernel(&self, d: isize) -> f64 {
        let w = self.half_bandwidth;
        if d == 0 {
            2.0 * w
        } else {
            sin_pi(2.0 * w * d as f64) / (std::f64::consts::PI * d as f64)
        }
    }
}

/// A computed DPSS set. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct DpssSet {
    params: DpssParams,
    vectors: Vec<Vec<f64>>,
    eigenvalues: Vec<f64>,
}

impl DpssSet {
    /// Assemble a set from precomputed parts without solving anything.
    /// Only shapes are checked; useful for fault injection and for loading
    /// sets computed elsewhere.
    pub fn from_parts(params: DpssParams, vectors: Vec<Vec<f64>>, eigenvalues: Vec<f64>) -> Result<Self> {
        let m = params.length;
        if vectors.len() != m || eigenvalues.len() != m || vectors.iter().any(|v| v.len() != m) {
            return Err(Error::LengthMismatch {
                expected: format!("{m} vectors of length {m} and {m} eigenvalues"),
                found: vectors.len(),
            });
        }
        Ok(Self {
            params,
            vectors,
            eigenvalues,
        })
    }

    pub fn params(&self) -> DpssParams {
        self.params
    }

    /// Number of members (`M`).
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, l: usize) -> f64 {
        self.eigenvalues[l]
    }

    /// `1 − λ_l`. At `W′ = 0.25` this is read off the paired member,
    /// `λ_{M−1−l}`, which keeps full precision when `λ_l` is close to 1.
    pub fn complement(&self, l: usize) -> f64 {
        if self.params.half_bandwidth == 0.25 {
            self.eigenvalues[self.len() - 1 - l]
        } else {
            1.0 - self.eigenvalues[l]
        }
    }

    /// Member `l` as a slice indexed from `n = −(M−1)/2`.
    pub fn vector(&self, l: usize) -> &[f64] {
        &self.vectors[l]
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// `s_l[n]`, zero outside the support.
    pub fn sample(&self, l: usize, n: isize) -> f64 {
        let h = self.params.half_length() as isize;
        if n < -h || n > h {
            0.0
        } else {
            self.vectors[l][(n + h) as usize]
        }
    }

    /// `s_lᵀ K s_l`, recomputed from the stored vector.
    pub fn rayleigh_quotient(&self, l: usize) -> f64 {
        rayleigh_quotient(&self.params, &self.vectors[l])
    }

    /// `max_{l,n} |λ_l s_l[n] − (K s_l)[n]|`.
    pub fn eigen_residual(&self) -> f64 {
        let m = self.len();
        let kernel: Vec<f64> = (0..m as isize).map(|d| self.params.kernel(d)).collect();
        let mut worst: f64 = 0.0;
        for (v, lam) in self.vectors.iter().zip(&self.eigenvalues) {
            for i in 0..m {
                let ks = compensated_sum((0..m).map(|j| kernel[i.abs_diff(j)] * v[j]));
                worst = worst.max((lam * v[i] - ks).abs());
            }
        }
        worst
    }

    /// `max_{l,k} |⟨s_l, s_k⟩ − δ_lk|`.
    pub fn orthonormality_residual(&self) -> f64 {
        gram_residual(&self.vectors)
    }

    /// `|Σ_l λ_l − 2W′M|`.
    pub fn trace_residual(&self) -> f64 {
        let expected = 2.0 * self.params.half_bandwidth * self.len() as f64;
        (compensated_sum(self.eigenvalues.iter().copied()) - expected).abs()
    }
}

fn rayleigh_quotient(params: &DpssParams, v: &[f64]) -> f64 {
    // sᵀKs / sᵀs with sᵀKs = K(0)Σs² + 2 Σ_{d>=1} K(d) Σ_n s[n]s[n+d].
    // Dividing by sᵀs removes the normalization error of the eigensolver,
    // which otherwise dominates for eigenvalues close to 1.
    let m = v.len();
    let norm2 = compensated_sum(v.iter().map(|x| x * x));
    let mut acc = crate::numeric::CompensatedSum::new();
    acc.add(params.kernel(0) * norm2);
    for d in 1..m {
        let rho = compensated_sum((0..m - d).map(|i| v[i] * v[i + d]));
        acc.add(2.0 * params.kernel(d as isize) * rho);
    }
    acc.value() / norm2
}

pub(crate) fn gram_residual(vectors: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate().skip(i) {
            let dot = compensated_sum(a.iter().zip(b).map(|(x, y)| x * y));
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

/// `+1` or `−1` such that the first significant entry of `v` becomes positive.
pub fn canonical_sign(v: &[f64]) -> f64 {
    let peak = v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let cutoff = peak * SIGN_THRESHOLD;
    match v.iter().find(|x| x.abs() > cutoff) {
        Some(x) if *x < 0.0 => -1.0,
        _ => 1.0,
    }
}

/// Compute the DPSS set for `params`, rejecting lengths above
/// [`DEFAULT_MAX_LENGTH`].
pub fn compute_dpss(params: &DpssParams) -> Result<DpssSet> {
    compute_dpss_with_limit(params, DEFAULT_MAX_LENGTH)
}

/// [`compute_dpss`] with an explicit size limit.
pub fn compute_dpss_with_limit(params: &DpssParams, max_length: usize) -> Result<DpssSet> {
    let m = params.length;
    if m > max_length {
        return Err(Error::LengthTooLarge {
            length: m,
            max: max_length,
        });
    }

    // Commuting tridiagonal matrix: diagonal ((M−1−2i)/2)² cos(2πW′),
    // off-diagonal i(M−i)/2.
    let c = cos_pi(2.0 * params.half_bandwidth);
    let diag: Vec<f64> = (0..m)
        .map(|i| {
            let t = (m as f64 - 1.0 - 2.0 * i as f64) / 2.0;
            t * t * c
        })
        .collect();
    let off: Vec<f64> = (1..m).map(|i| (i * (m - i)) as f64 / 2.0).collect();
    let eig = symmetric_tridiagonal_eigen(&diag, &off)?;

    let scale = eig.values.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    for (k, w) in eig.values.windows(2).enumerate() {
        let gap = w[0] - w[1];
        if gap < TIE_THRESHOLD * scale {
            return Err(Error::EigenvalueTie { index: k, gap });
        }
    }

    let vectors: Vec<Vec<f64>> = eig
        .vectors
        .into_iter()
        .map(|mut v| {
            let sign = canonical_sign(&v);
            if sign < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            v
        })
        .collect();
    let eigenvalues = vectors.iter().map(|v| rayleigh_quotient(params, v)).collect();

    Ok(DpssSet {
        params: *params,
        vectors,
        eigenvalues,
    })
}

/// Residuals of the flip and pairing symmetries of the `(2N+3, 0.25)` family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlipPairingReport {
    /// `max |s_l[n] − (−1)^{n+1} s_{2N+2−l}[−n]|` over `l ≠ N+1`, both sides
    /// sign-canonicalized.
    pub flip_residual: f64,
    /// `max_l |λ_l + λ_{2N+2−l} − 1|`.
    pub pairing_residual: f64,
}

pub fn flip_pairing_report(set: &DpssSet) -> Result<FlipPairingReport> {
    let params = set.params();
    let n = params.family_order().ok_or(Error::FamilyMismatch {
        length: params.length,
        half_bandwidth: params.half_bandwidth,
    })?;
    let m = set.len();
    let h = params.half_length() as isize;
    let last = 2 * n + 2;

    let mut flip: f64 = 0.0;
    let mut pairing: f64 = 0.0;
    for l in 0..m {
        let partner = last - l;
        pairing = pairing.max((set.eigenvalue(l) + set.eigenvalue(partner) - 1.0).abs());
        if l == n + 1 {
            continue;
        }
        let lhs = set.vector(l);
        let rhs: Vec<f64> = (-h..=h)
            .map(|k| {
                let sign = if (k + 1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                sign * set.sample(partner, -k)
            })
            .collect();
        let (sl, sr) = (canonical_sign(lhs), canonical_sign(&rhs));
        for (a, b) in lhs.iter().zip(&rhs) {
            flip = flip.max((sl * a - sr * b).abs());
        }
    }
    Ok(FlipPairingReport {
        flip_residual: flip,
        pairing_residual: pairing,
    })
}

/// `max_n |s_{N+1}[2n]|` for a `(2N+3, 0.25)` set. The middle member lives
/// on odd samples only.
pub fn middle_member_even_leakage(set: &DpssSet) -> Result<f64> {
    let params = set.params();
    let n = params.family_order().ok_or(Error::FamilyMismatch {
        length: params.length,
        half_bandwidth: params.half_bandwidth,
    })?;
    let h = (n / 2) as isize;
    Ok((-h..=h).map(|k| set.sample(n + 1, 2 * k).abs()).fold(0.0, f64::max))
}

/// The orthonormal basis `b_l[n] = √2·s_l[2n; 2N+3, 0.25]`,
/// `n = −N/2..=N/2`, `l = 0..=N`, in order of decreasing `λ̄_l`.
#[derive(Debug, Clone)]
pub struct OrthoBasis {
    n: usize,
    members: Vec<Vec<f64>>,
    source: DpssSet,
}

impl OrthoBasis {
    /// Build the basis from an already computed `(2N+3, 0.25)` set.
    pub fn from_set(set: DpssSet) -> Result<Self> {
        let params = set.params();
        let n = params.family_order().ok_or(Error::FamilyMismatch {
            length: params.length,
            half_bandwidth: params.half_bandwidth,
        })?;
        let h = (n / 2) as isize;
        let members = (0..=n)
            .map(|l| {
                (-h..=h)
                    .map(|k| std::f64::consts::SQRT_2 * set.sample(l, 2 * k))
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            members,
            source: set,
        })
    }

    /// Support parameter `N`; members live on `[−N/2, N/2]`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_half(&self) -> usize {
        self.n / 2
    }

    /// Number of members, `N + 1`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, l: usize) -> &[f64] {
        &self.members[l]
    }

    pub fn members(&self) -> &[Vec<f64>] {
        &self.members
    }

    pub fn member_sequence(&self, l: usize) -> Sequence {
        Sequence::from_real(&self.members[l]).expect("basis members have odd length")
    }

    /// All `2N+3` eigenvalues `λ̄_l` of the generating set.
    pub fn source_eigenvalues(&self) -> &[f64] {
        self.source.eigenvalues()
    }

    /// The generating `(2N+3, 0.25)` DPSS set.
    pub fn source(&self) -> &DpssSet {
        &self.source
    }

    /// `max |⟨b_l, b_k⟩ − δ_lk|`.
    pub fn gram_residual(&self) -> f64 {
        gram_residual(&self.members)
    }
}

/// Even-subsampled DPSS basis for support parameter `n` (even, `>= 2`).
pub fn even_subsample_basis(n: usize) -> Result<OrthoBasis> {
    let params = DpssParams::half_sample_family(n)?;
    OrthoBasis::from_set(compute_dpss(&params)?)
}
