use super::{css_construct_with, css_from_known, AsymmetricCSSCode, CssOptions, Purity};
use crate::code_families::{bch, reed_muller};
use crate::eg_geometry::{
    consecutive_root_run, count_flats_through_flat, eg_cyclic_code, eg_cyclic_dual_defining_set, eg_type1_code, incidence_matrix,
    incidence_parity_check, majority_logic_bound, EGSpec,
};
use crate::error::{Error, Result};
use crate::linear_code::{DistanceBound, DistanceMethod};

fn rm_pair(r1: usize, r2: usize, m: usize) -> Result<AsymmetricCSSCode> {
    let c_x = reed_muller(r2, m)?;
    let c_z = reed_muller(m - 1 - r1, m)?;
    let d_x = DistanceBound::exact(1 << (m - r2), DistanceMethod::KnownFamily);
    let d_z = DistanceBound::exact(1 << (r1 + 1), DistanceMethod::KnownFamily);
    let opts = CssOptions {
        cx_descriptor: Some(format!("RM({r2}, {m})")),
        cz_descriptor: Some(format!("RM({}, {m})", m - 1 - r1)),
        ..CssOptions::default()
    };
    css_from_known(c_x, c_z, d_x, d_z, Purity::Pure, opts)
}

/// `C_x = RM(r2, m)`, `C_z = RM(m-1-r1, m)`:
/// `[[2^m, sum_{j=r1+1..r2} C(m, j), 2^(m-r2)/2^(r1+1)]]`.
pub fn rm_family(r1: usize, r2: usize, m: usize) -> Result<AsymmetricCSSCode> {
    if r1 >= r2 || r2 >= m {
        return Err(Error::Range(format!("need 0 <= r1 < r2 < m, got r1 = {r1}, r2 = {r2}, m = {m}")));
    }
    rm_pair(r1, r2, m)
}

/// The symmetric RM code of order `m-1-r` with `C_x` enlarged by `delta_r`
/// orders: `d_x = 2^(r+1-delta_r)`, `d_z = 2^(r+1)`.
pub fn rm_rate_gain(r: usize, delta_r: usize, m: usize) -> Result<AsymmetricCSSCode> {
    if m == 0 || delta_r > r || r > (m - 1) / 2 {
        return Err(Error::Range(format!("need 0 <= delta_r <= r <= (m-1)/2, got r = {r}, delta_r = {delta_r}, m = {m}")));
    }
    rm_pair(r, m - 1 - r + delta_r, m)
}

/// `C_x = BCH(delta1)`, `C_z = BCH(delta2)^perp` at `n = 2^m - 1`:
/// `[[n, m(delta2 - delta1)/2, >= delta1 / >= delta_max + 1]]` with
/// `delta_max = 2^ceil(m/2) - 1`.
pub fn bch_family(delta1: usize, delta2: usize, m: usize) -> Result<AsymmetricCSSCode> {
    if !(2..=20).contains(&m) {
        return Err(Error::Range(format!("m = {m} outside [2, 20]")));
    }
    let n = (1usize << m) - 1;
    let delta_max = (1usize << m.div_ceil(2)) - 1;
    if delta1 % 2 == 0 || delta2 % 2 == 0 {
        return Err(Error::Range(format!("design distances must be odd, got {delta1}, {delta2}")));
    }
    if delta1 < 2 || delta1 >= delta2 || delta2 > delta_max {
        return Err(Error::Range(format!(
            "need 2 <= delta1 < delta2 <= {delta_max}, got {delta1}, {delta2}"
        )));
    }
    let c_x = bch(n, 2, delta1)?.to_linear_code()?;
    let c_z = bch(n, 2, delta2)?.to_linear_code()?.dual();
    let opts = CssOptions {
        dx_hint: Some((delta1, DistanceMethod::DesignDistance)),
        dz_hint: Some((delta_max + 1, DistanceMethod::FamilyBound)),
        cx_descriptor: Some(format!("BCH({n}, {delta1})")),
        cz_descriptor: Some(format!("BCH({n}, {delta2})^perp")),
        ..CssOptions::default()
    };
    css_construct_with(&c_x, &c_z, opts)
}

/// `delta_0`: one more than the longest run `1..L` of roots of the dual of
/// the cyclic EG code, so that `BCH(delta) ^perp <= C_EG` for
/// `delta <= delta_0`.
pub fn bch_ldpc_delta0(m: usize, mu: usize, s: u32, p: u32) -> Result<usize> {
    let dual_set = eg_cyclic_dual_defining_set(m, mu, s, p)?;
    let n = (p as usize).pow(m as u32 * s) - 1;
    Ok(consecutive_root_run(&dual_set, n))
}

/// `C_x = BCH(n, p; delta)`, `C_z` the cyclic EG code of `mu`-flats in
/// EG(m, p^s), `H_z` its non-origin incidence matrix. `d_z` is bounded by
/// majority logic on `H_z`.
pub fn bch_ldpc_family(m: usize, mu: usize, s: u32, p: u32, delta: usize) -> Result<AsymmetricCSSCode> {
    if delta % 2 == 0 || delta < 3 {
        return Err(Error::Range(format!("design distance must be odd and >= 3, got {delta}")));
    }
    let delta0 = bch_ldpc_delta0(m, mu, s, p)?;
    if delta > delta0 {
        return Err(Error::Range(format!("design distance {delta} exceeds delta_0 = {delta0}")));
    }
    let eg_cyclic = eg_cyclic_code(m, mu, s, p)?;
    let n = eg_cyclic.n();
    let bch_code = bch(n, p, delta)?;
    let dual_set = eg_cyclic.dual_defining_set();
    if !bch_code.defining_set().iter().all(|z| dual_set.binary_search(z).is_ok()) {
        return Err(Error::NotSubcode(format!("BCH({n}, {delta}) roots are not roots of the EG dual")));
    }
    let eg = EGSpec::new(m, s, p)?;
    let h_z = incidence_parity_check(&eg, mu, true)?;
    let ml = majority_logic_bound(incidence_matrix(&eg, mu, 0, true)?.matrix());
    let opts = CssOptions {
        dx_hint: Some((delta, DistanceMethod::DesignDistance)),
        dz_hint: Some((ml.bound, DistanceMethod::MajorityLogic)),
        h_z: Some(h_z),
        cx_descriptor: Some(format!("BCH({n}, {delta})")),
        cz_descriptor: Some(format!("EG({m}, {p}^{s}) cyclic, mu = {mu}")),
        ..CssOptions::default()
    };
    let mut code = css_construct_with(&bch_code.to_linear_code()?, &eg_cyclic.to_linear_code()?, opts)?;
    code.notes.push(flat_count_note("d_z", m, mu, s, p)?);
    Ok(code)
}

/// The flat-count quantity `A = #mu-flats through a (mu-1)-flat`, recorded
/// for comparison only; reported bounds come from the parity-check matrix.
fn flat_count_note(which: &str, m: usize, mu: usize, s: u32, p: u32) -> Result<String> {
    let a = count_flats_through_flat(m, mu, mu - 1, s, p)?;
    Ok(format!("flat count A = {a} ({mu}-flats through a {}-flat); {which} bound taken from the parity-check matrix", mu - 1))
}

/// Type-I EG codes on all `p^(ms)` points: `C_x` from `mu_x`-flats and
/// `C_z` from `mu_z`-flats, for `1 < mu_z < m` and
/// `m - mu_z + 1 <= mu_x < m`. Both distances are bounded by majority logic.
///
/// `m = 2` with `mu_x = mu_z = 1` is accepted with a note; the containment
/// check then rejects it.
pub fn asym_qldpc_family(m: usize, mu_x: usize, mu_z: usize, s: u32, p: u32) -> Result<AsymmetricCSSCode> {
    let warn = m == 2 && mu_x == 1 && mu_z == 1;
    if !warn && !(1 < mu_z && mu_z < m && m - mu_z < mu_x && mu_x < m) {
        return Err(Error::Range(format!(
            "need 1 < mu_z < m and m - mu_z + 1 <= mu_x < m, got m = {m}, mu_x = {mu_x}, mu_z = {mu_z}"
        )));
    }
    let eg = EGSpec::new(m, s, p)?;
    let hint = |mu: usize| -> Result<_> {
        let ml = majority_logic_bound(incidence_matrix(&eg, mu, 0, false)?.matrix());
        Ok(Some((ml.bound, DistanceMethod::MajorityLogic)))
    };
    let opts = CssOptions {
        dx_hint: hint(mu_x)?,
        dz_hint: hint(mu_z)?,
        h_x: Some(incidence_parity_check(&eg, mu_x, false)?),
        h_z: Some(incidence_parity_check(&eg, mu_z, false)?),
        cx_descriptor: Some(format!("EG({m}, {p}^{s}) type-I, mu = {mu_x}")),
        cz_descriptor: Some(format!("EG({m}, {p}^{s}) type-I, mu = {mu_z}")),
        ..CssOptions::default()
    };
    let c_x = eg_type1_code(&eg, mu_x, false)?;
    let c_z = eg_type1_code(&eg, mu_z, false)?;
    let mut code = css_construct_with(&c_x, &c_z, opts)?;
    if warn {
        code.notes.push("m = 2 lies outside the proven range for EG pairs".into());
    }
    code.notes.push(flat_count_note("d_x", m, mu_x, s, p)?);
    code.notes.push(flat_count_note("d_z", m, mu_z, s, p)?);
    Ok(code)
}
