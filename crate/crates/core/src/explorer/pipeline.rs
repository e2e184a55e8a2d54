use crate::codes::{extended_qr_code, is_free_module, qr_involution, stabilizes, Involution, LinearCode};
use crate::enumerators::binom_parity;
use crate::error::{Error, Result};

/// Lengths at which the extremal self-dual codes are known.
const DESK_SCALE_Q: [u64; 2] = [23, 47];

#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub q: Option<u64>,
    pub n: usize,
    pub dim: usize,
    pub distance: usize,
    /// `d = 4m + 4` at `n = 24m`; `None` at other lengths.
    pub extremal: Option<bool>,
    pub stabilizes: bool,
    pub fixed_point_free: bool,
    pub involution: Vec<usize>,
    pub free: bool,
    pub fixed_dim: usize,
    /// Parameters of `π(C(σ))`.
    pub pi_n: usize,
    pub pi_dim: usize,
    pub pi_distance: usize,
    pub pi_self_dual: bool,
    /// `2 d(π(C(σ))) >= d(C)`.
    pub half_bound_ok: bool,
    /// Freeness forced for extremal codes of length `24m` with `m` odd, or
    /// `m = 2μ` and `C(5μ − 1, μ − 1)` odd.
    pub predicted_free: Option<bool>,
    pub warning: Option<String>,
}

/// Runs the free-module test for a self-dual code and a fixed-point-free
/// involution in its automorphism group.
pub fn analyze_involution(code: &LinearCode, sigma: &Involution) -> Result<InvolutionReport> {
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    if !stabilizes(code, sigma)? {
        return Err(Error::NotStabilizing);
    }
    if let Some(p) = sigma.first_fixed_point() {
        return Err(Error::HasFixedPoints(p + 1));
    }
    let n = code.n();
    let distance = code.min_distance()?.expect("self-dual codes are nonzero");
    let check = is_free_module(code, sigma)?;
    let pi_distance = check
        .pi_image
        .min_distance()?
        .ok_or_else(|| Error::Consistency("π(C(σ)) is the zero code".into()))?;
    let extremal = (n % 24 == 0).then(|| distance == 4 * (n / 24) + 4);
    let predicted_free = (extremal == Some(true))
        .then(|| {
            let m = n / 24;
            (m % 2 == 1 || binom_parity((m / 2) as u64)).then_some(true)
        })
        .flatten();
    if predicted_free == Some(true) && !check.is_free {
        return Err(Error::Consistency(format!(
            "extremal code of length {n} is not free although freeness is forced"
        )));
    }
    Ok(InvolutionReport {
        q: None,
        n,
        dim: code.dim(),
        distance,
        extremal,
        stabilizes: true,
        fixed_point_free: true,
        involution: sigma.one_based_images(),
        free: check.is_free,
        fixed_dim: check.fixed_code.dim(),
        pi_n: check.pi_image.n(),
        pi_dim: check.pi_image.dim(),
        pi_distance,
        pi_self_dual: check.pi_image.is_self_dual(),
        half_bound_ok: 2 * pi_distance >= distance,
        predicted_free,
        warning: None,
    })
}

/// Extended QR code of length `q + 1`, the involution `z ↦ −1/z`, and the
/// free-module test, with extremality enforced at `q = 23, 47`.
pub fn involution_pipeline(q: u64) -> Result<InvolutionReport> {
    let code = extended_qr_code(q)?;
    let sigma = qr_involution(q)?;
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let mut report = analyze_involution(&code, &sigma)?;
    report.q = Some(q);
    if DESK_SCALE_Q.contains(&q) {
        if report.extremal != Some(true) {
            return Err(Error::Consistency(format!(
                "extended QR code at q = {q} has distance {}, expected {}",
                report.distance,
                4 * (report.n / 24) + 4
            )));
        }
    } else {
        report.warning = Some(format!("q = {q} is outside the extremal cases 23 and 47"));
    }
    if !report.half_bound_ok {
        return Err(Error::Consistency(format!(
            "π-image distance {} is below half of {}",
            report.pi_distance, report.distance
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct BlockReport {
    pub copies: usize,
    pub n: usize,
    pub free: bool,
    pub fixed_dim: usize,
    pub pi_dim: usize,
    pub pi_self_dual: bool,
    /// Semi self-dual `D` with `π⊥ + ⟨1⟩ ⊆ D ⊆ D⊥ ⊆ π`, when the gap allows one.
    pub extracted: Option<LinearCode>,
    pub chain_holds: bool,
}

#[derive(Debug, Clone)]
pub struct NonFreeReport {
    pub blocks: Vec<BlockReport>,
    /// `⟨1100, 0011⟩` with `σ = (1,3)(2,4)`.
    pub control_free: bool,
    pub control_pi_dim: usize,
}

fn block_report(copies: usize) -> Result<BlockReport> {
    let n = 4 * copies;
    let code = LinearCode::pairs_code(n)?;
    let sigma = Involution::adjacent_pairs(n)?;
    let check = is_free_module(&code, &sigma)?;
    let pi = &check.pi_image;
    let m = pi.n();
    let envelope = pi.dual().extend(&[crate::gf2::BitVector::ones(m)])?;
    let extracted = if m >= 2 * envelope.dim() + 2 {
        Some(envelope.extract_semi_selfdual()?)
    } else {
        None
    };
    let chain_holds = match &extracted {
        Some(d) => {
            d.is_semi_self_dual()
                && d.contains_all_ones()
                && envelope.is_subcode_of(d)
                && d.is_subcode_of(d.dual())
                && d.dual().is_subcode_of(pi)
                && d.dual().min_distance()? >= pi.min_distance()?
        }
        None => false,
    };
    Ok(BlockReport {
        copies,
        n,
        free: check.is_free,
        fixed_dim: check.fixed_code.dim(),
        pi_dim: pi.dim(),
        pi_self_dual: pi.is_self_dual(),
        extracted,
        chain_holds,
    })
}

/// Sums of the block `⟨1100, 0011⟩` with `σ` pairing coordinates inside each
/// block, which are never free, and the free control `σ = (1,3)(2,4)`.
pub fn non_free_witness() -> Result<NonFreeReport> {
    let blocks = (1..=3).map(block_report).collect::<Result<Vec<_>>>()?;
    let block = LinearCode::pairs_code(4)?;
    let control = is_free_module(&block, &Involution::from_transpositions(4, &[(1, 3), (2, 4)])?)?;
    Ok(NonFreeReport {
        blocks,
        control_free: control.is_free,
        control_pi_dim: control.pi_image.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_pipeline() {
        let r = involution_pipeline(23).unwrap();
        assert_eq!((r.n, r.dim, r.distance), (24, 12, 8));
        assert_eq!(r.extremal, Some(true));
        assert!(r.free && r.pi_self_dual);
        assert_eq!((r.pi_n, r.pi_dim), (12, 6));
        assert!(r.pi_distance >= 4);
        assert_eq!(r.predicted_free, Some(true));
        assert!(r.warning.is_none());
    }

    #[test]
    fn small_and_rejected_pipelines() {
        let r = involution_pipeline(7).unwrap();
        assert_eq!((r.n, r.distance), (8, 4));
        assert!(r.warning.is_some());
        assert!(matches!(involution_pipeline(17), Err(Error::BadResidueCondition { q: 17, .. })));
    }

    #[test]
    fn non_free_blocks() {
        let r = non_free_witness().unwrap();
        assert!(r.control_free);
        assert_eq!(r.control_pi_dim, 1);
        let one = &r.blocks[0];
        assert!(!one.free && one.fixed_dim == 2 && one.extracted.is_none());
        let two = &r.blocks[1];
        assert!(!two.free && two.chain_holds);
        let d = two.extracted.as_ref().unwrap();
        assert_eq!((d.n(), d.is_semi_self_dual()), (4, true));
        assert!(r.blocks[2].chain_holds);
        assert_eq!(r.blocks[2].extracted.as_ref().unwrap().n(), 6);
    }

    #[test]
    fn rejects_non_stabilizing_involutions() {
        let c = LinearCode::pairs_code(4).unwrap();
        let s = Involution::from_transpositions(4, &[(1, 4), (2, 3)]).unwrap();
        assert!(analyze_involution(&c, &s).is_ok());
        let h = extended_qr_code(7).unwrap();
        let s = Involution::adjacent_pairs(8).unwrap();
        if !stabilizes(&h, &s).unwrap() {
            assert_eq!(analyze_involution(&h, &s).unwrap_err(), Error::NotStabilizing);
        }
    }
}
