//! Orbifold and stringy Euler numbers by several independent routes, and the
//! mirror test comparing them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polytope::{normalized_volume, Polytope};
use crate::quasismooth::{is_transverse, try_has_ip_property};
use crate::wps::{
    mirror_lattice, newton_points, subset_gcd, weight_flags, MirrorLattice, SubsetMask,
    WeightVector,
};

/// `(1/w) sum_{l,r} prod_{i : l q_i, r q_i in Z} (1 - 1/q_i)`, with an
/// empty product equal to 1.
pub fn vafa_double_sum(w: &WeightVector) -> Rational {
    let ws = w.weights();
    let degree = w.degree();
    // mask of indices with w | l w_i, counted over l
    let mut freq: HashMap<u32, u64> = HashMap::new();
    for l in 0..degree {
        let mask = ws
            .iter()
            .enumerate()
            .filter(|&(_, &x)| (l as u128 * x as u128).is_multiple_of(degree as u128))
            .fold(0u32, |m, (i, _)| m | 1 << i);
        *freq.entry(mask).or_default() += 1;
    }
    let mut pairs: HashMap<u32, u128> = HashMap::new();
    for (&a, &ca) in &freq {
        for (&b, &cb) in &freq {
            *pairs.entry(a & b).or_default() += ca as u128 * cb as u128;
        }
    }
    let factors: Vec<Rational> = ws
        .iter()
        .map(|&x| Rational::one() - Rational::new(degree, x))
        .collect();
    let mut masks: Vec<(u32, u128)> = pairs.into_iter().collect();
    masks.sort_unstable();
    let total: Rational = masks
        .into_iter()
        .map(|(mask, count)| {
            let prod: Rational = SubsetMask(mask)
                .members()
                .fold(Rational::one(), |p, i| p * &factors[i]);
            prod * Rational::from(count)
        })
        .sum();
    total / Rational::from(degree)
}

/// Value of the subset-gcd form of the double sum, with the signed partial
/// sums grouped by `|J|` (before division by `w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSum {
    pub value: Rational,
    pub partials: Vec<Rational>,
}

/// `(1/w) sum_{|J| <= d-1} (-1)^{|J|} n_J^2 prod_{j in J} 1/q_j`.
pub fn vafa_subset_sum(w: &WeightVector) -> SubsetSum {
    let d = w.dim();
    let degree = w.degree();
    let mut partials = vec![Rational::zero(); d];
    for j in SubsetMask::all(w.len()) {
        let c = j.len();
        if c + 1 > d {
            continue;
        }
        let n = Rational::from(subset_gcd(w, j));
        let mut term = &n * &n;
        for i in j.members() {
            term *= Rational::new(degree, w.weights()[i]);
        }
        if c % 2 == 1 {
            term = -term;
        }
        partials[c] += term;
    }
    let value = partials.iter().sum::<Rational>() / Rational::from(degree);
    SubsetSum { value, partials }
}

/// `chi_str` of the mirror hypersurface:
/// `(1/w) sum_{|J| >= 2} (-1)^{|J|} n_{J̄}^2 prod_{i in J̄} 1/q_i`.
pub fn stringy_mirror_closed(w: &WeightVector) -> Result<Rational> {
    if !try_has_ip_property(w)? {
        return Err(Error::NotIp(w.to_string()));
    }
    Ok(stringy_closed_unchecked(w))
}

fn stringy_closed_unchecked(w: &WeightVector) -> Rational {
    let n = w.len();
    let degree = w.degree();
    let mut total = Rational::zero();
    for j in SubsetMask::all(n) {
        if j.len() < 2 {
            continue;
        }
        let rest = j.complement(n);
        let g = Rational::from(subset_gcd(w, rest));
        let mut term = &g * &g;
        for i in rest.members() {
            term *= Rational::new(degree, w.weights()[i]);
        }
        if j.len() % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    total / Rational::from(degree)
}

/// Whether the lattice hull of `Δ_w` has the origin as its only interior
/// lattice point, using the monomials as its lattice points.
fn dual_hull_is_canonical(lattice: &MirrorLattice) -> Result<bool> {
    let newton = lattice.newton_polytope()?;
    if !newton.is_full_dimensional() {
        return Ok(false);
    }
    let inner = newton_points(lattice.weights())?
        .iter()
        .filter(|u| newton.contains_in_relative_interior(&lattice.monomial_point(u)))
        .count();
    Ok(inner == 1 && newton.contains_in_relative_interior(&vec![Rational::zero(); lattice.rank()]))
}

/// `sum_{k=1}^{d} (-1)^{k-1} sum_{dim θ = k} Vol_k(θ) Vol_{d-k}(σ_θ ∩ Δ*)`
/// for `Δ = conv(v_0, ..., v_d)`.
pub fn stringy_polytope(lattice: &MirrorLattice) -> Result<Rational> {
    if !dual_hull_is_canonical(lattice)? {
        return Err(Error::NotAlmostPseudoreflexive(format!(
            "the lattice hull of the dual of the simplex for {} is not canonical",
            lattice.weights()
        )));
    }
    let delta = lattice.mirror_simplex()?;
    stringy_from_faces(&delta)
}

/// The face sum of [`stringy_polytope`] for any polytope with the origin in
/// its interior.
pub fn stringy_from_faces(delta: &Polytope) -> Result<Rational> {
    let d = delta.dim();
    let mut total = Rational::zero();
    for (i, face) in delta.faces().iter().enumerate() {
        let k = face.dim;
        if k == 0 {
            continue;
        }
        let vol = delta.face_volume(i);
        let cone = if k == d {
            Rational::one()
        } else {
            normalized_volume(&delta.normal_cone_section(i)?)
        };
        let term = vol * cone;
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

fn is_reflexive(p: &Polytope) -> bool {
    p.is_full_dimensional()
        && p.is_lattice_polytope()
        && p.facets().iter().all(|f| f.offset == Rational::one())
}

/// `sum_{k=1}^{d-2} (-1)^{k-1} sum_{dim θ = k} Vol_k(θ) Vol_{d-k-1}(θ*)`.
pub fn stringy_reflexive(delta: &Polytope) -> Result<Rational> {
    if !is_reflexive(delta) {
        return Err(Error::NotReflexive);
    }
    let d = delta.dim();
    let mut total = Rational::zero();
    for k in 1..d.saturating_sub(1) {
        for (i, _) in delta.faces_of_dim(k) {
            let dual_face = Polytope::hull(&delta.dual_face_vertices(i))?;
            let term = delta.face_volume(i) * normalized_volume(&dual_face);
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(total)
}

/// `Vol_3(Δ) - sum_facets Vol_2(θ)/n_θ + sum_edges Vol_1(θ) Vol_1(θ*) - 24`,
/// which vanishes on the polytopes the identity is stated for.
pub fn k3_identity(delta: &Polytope) -> Result<Rational> {
    if delta.ambient_dim() != 3 || !delta.is_full_dimensional() {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: delta.dim(),
        });
    }
    if !delta.origin_in_interior() || !delta.is_lattice_polytope() {
        return Err(Error::NotAlmostPseudoreflexive(
            "expected a lattice polytope around 0".into(),
        ));
    }
    let mut total = normalized_volume(delta);
    for (fi, facet) in delta.facets().iter().enumerate() {
        let face = delta
            .faces_of_dim(2)
            .find(|(_, f)| f.vertices == facet.vertices)
            .map(|(i, _)| i)
            .expect("facet missing from face lattice");
        total -= delta.face_volume(face) / delta.facet_distance(fi);
    }
    for (i, _) in delta.faces_of_dim(1) {
        let dual_edge = Polytope::hull(&delta.dual_face_vertices(i))?;
        total += delta.face_volume(i) * normalized_volume(&dual_edge);
    }
    Ok(total - Rational::from(24))
}

/// Flags and Euler numbers of a weight vector, with diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub weights: WeightVector,
    pub degree: u64,
    pub well_formed: bool,
    pub gorenstein: bool,
    pub ip: bool,
    pub transverse: bool,
    pub chi_orb_formula: Rational,
    pub chi_str_mirror: Option<Rational>,
    pub integral: bool,
    pub methods_agree: bool,
    pub notes: Vec<String>,
}

fn sign(d: usize) -> Rational {
    if (d - 1).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Runs every applicable route and compares them.
pub fn mirror_test(w: &WeightVector) -> Result<EulerReport> {
    let flags = weight_flags(w);
    let d = w.dim();
    let double = vafa_double_sum(w);
    let mut notes = Vec::new();
    let mut agree = true;

    if flags.well_formed {
        let subset = vafa_subset_sum(w).value;
        if subset != double {
            agree = false;
            notes.push(format!(
                "subset sum {subset} differs from double sum {double}"
            ));
        }
    } else {
        notes.push("not well-formed: subset sum and mirror lattice skipped".into());
    }

    let ip = try_has_ip_property(w)?;
    let transverse = flags.well_formed && is_transverse(w);
    let mut chi_str = None;
    if ip {
        let closed = stringy_closed_unchecked(w);
        let expected = sign(d) * &double;
        if closed != expected {
            agree = false;
            notes.push(format!(
                "closed form {closed} differs from (-1)^(d-1) times double sum {expected}"
            ));
        }
        if flags.well_formed {
            let lattice = mirror_lattice(w)?;
            match stringy_polytope(&lattice) {
                Ok(poly) if poly == closed => {}
                Ok(poly) => {
                    agree = false;
                    notes.push(format!(
                        "polytope formula {poly} differs from closed form {closed}"
                    ));
                }
                Err(e) => {
                    agree = false;
                    notes.push(format!("polytope formula failed: {e}"));
                }
            }
            if !transverse {
                if let Some(note) = newton_reflexive_note(&lattice, &closed)? {
                    notes.push(note);
                }
            }
        }
        if !closed.is_integer() {
            notes.push(format!(
                "chi_str {closed} is not an integer: no Landau-Ginzburg description, so X_w has no mirror of this form"
            ));
        }
        chi_str = Some(closed);
    } else {
        notes.push("no IP-property: formula value only, no geometric meaning is attached".into());
    }

    let integral = double.is_integer() && chi_str.as_ref().is_none_or(Rational::is_integer);
    if transverse && !double.is_integer() {
        notes.push(format!("transverse but chi_orb {double} is not an integer"));
    }
    Ok(EulerReport {
        weights: w.clone(),
        degree: w.degree(),
        well_formed: flags.well_formed,
        gorenstein: flags.gorenstein,
        ip,
        transverse,
        chi_orb_formula: double,
        chi_str_mirror: chi_str,
        integral,
        methods_agree: agree,
        notes,
    })
}

/// Compares with the Calabi-Yau whose Newton polytope is the (reflexive)
/// lattice hull of `Δ_w`, when that hull is reflexive.
fn newton_reflexive_note(lattice: &MirrorLattice, chi_str: &Rational) -> Result<Option<String>> {
    let d = lattice.rank();
    if d < 3 {
        return Ok(None);
    }
    let newton = lattice.newton_polytope()?;
    if !is_reflexive(&newton) {
        return Ok(None);
    }
    let chi_y = stringy_reflexive(&newton)?;
    let mirror_of_y = sign(d) * &chi_y;
    let verdict = if &mirror_of_y == chi_str {
        "consistent with chi_str".to_string()
    } else {
        format!("mismatch: {mirror_of_y} != {chi_str}, so X*_w is not the mirror of X_w")
    };
    Ok(Some(format!(
        "reflexive Newton polytope route: chi = {chi_y}; its mirror has {mirror_of_y} ({verdict})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{point_from_ints, Polytope};

    fn wv(s: &str) -> WeightVector {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn double_sum_examples() {
        assert_eq!(vafa_double_sum(&wv("1,2,3,4,5")), q("-126"));
        assert_eq!(vafa_double_sum(&wv("1,1,1")), q("0"));
        assert_eq!(vafa_double_sum(&wv("1,1,1,1,1")), q("-200"));
        assert_eq!(vafa_double_sum(&wv("1,1,2,4,5")), q("-1032/5"));
        assert_eq!(vafa_double_sum(&wv("1,1,1,1")), q("24"));
    }

    #[test]
    fn subset_sum_partials() {
        let s = vafa_subset_sum(&wv("1,2,3,4,5"));
        assert_eq!(s.value, q("-126"));
        assert_eq!(
            s.partials,
            vec![q("225"), q("-585/4"), q("3375/8"), q("-19125/8")]
        );
        assert_eq!(vafa_subset_sum(&wv("1,1,6,14,21")).value, q("-506"));
        let quintic = vafa_subset_sum(&wv("1,1,1,1,1"));
        assert_eq!(
            quintic.partials,
            vec![q("25"), q("-25"), q("250"), q("-1250")]
        );
        let w = wv("1,1,2,4,5");
        assert_eq!(
            vafa_subset_sum(&w).partials[0],
            Rational::from(w.degree() * w.degree())
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(stringy_mirror_closed(&wv("1,1,6,14,21")).unwrap(), q("506"));
        assert_eq!(
            stringy_mirror_closed(&wv("1,1,2,4,5")).unwrap(),
            q("1032/5")
        );
        assert_eq!(stringy_mirror_closed(&wv("1,1,1,1")).unwrap(), q("24"));
        assert_eq!(
            stringy_mirror_closed(&wv("1,1,4")).unwrap_err(),
            Error::NotIp("1,1,4".into())
        );
    }

    #[test]
    fn polytope_formula_examples() {
        for (s, v) in [
            ("1,1,1,1,1", "200"),
            ("1,2,3,4,5", "126"),
            ("1,1,1,1", "24"),
            ("1,1,2,4,5", "1032/5"),
        ] {
            let l = mirror_lattice(&wv(s)).unwrap();
            assert_eq!(stringy_polytope(&l).unwrap(), q(v), "{s}");
        }
    }

    #[test]
    fn reflexive_formula_examples() {
        let l = mirror_lattice(&wv("1,1,6,14,21")).unwrap();
        let newton = l.newton_polytope().unwrap();
        assert_eq!(stringy_reflexive(&newton).unwrap(), q("-504"));
        let quintic = mirror_lattice(&wv("1,1,1,1,1"))
            .unwrap()
            .newton_polytope()
            .unwrap();
        assert_eq!(stringy_reflexive(&quintic).unwrap(), q("-200"));
        let triangle = Polytope::hull(&[
            point_from_ints(&[1, 0]),
            point_from_ints(&[0, 1]),
            point_from_ints(&[-1, -1]),
        ])
        .unwrap();
        assert_eq!(stringy_reflexive(&triangle).unwrap(), q("0"));
    }

    #[test]
    fn k3_identity_examples() {
        let l = mirror_lattice(&wv("1,1,1,1")).unwrap();
        assert_eq!(k3_identity(&l.mirror_simplex().unwrap()).unwrap(), q("0"));
        let quintic = mirror_lattice(&wv("1,1,1,1,1"))
            .unwrap()
            .mirror_simplex()
            .unwrap();
        assert!(matches!(
            k3_identity(&quintic),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mirror_test_examples() {
        let r = mirror_test(&wv("1,2,3,4,5")).unwrap();
        assert!(r.transverse && r.integral && r.methods_agree);
        assert_eq!(r.chi_orb_formula, q("-126"));
        assert_eq!(r.chi_str_mirror, Some(q("126")));

        let r = mirror_test(&wv("1,1,6,14,21")).unwrap();
        assert!(!r.transverse && r.methods_agree);
        assert_eq!(r.chi_str_mirror, Some(q("506")));
        assert!(
            r.notes
                .iter()
                .any(|n| n.contains("-504") && n.contains("mismatch")),
            "{:?}",
            r.notes
        );

        let r = mirror_test(&wv("1,1,2,4,5")).unwrap();
        assert!(!r.integral);
        assert_eq!(r.chi_str_mirror, Some(q("1032/5")));
        assert!(r
            .notes
            .iter()
            .any(|n| n.contains("no Landau-Ginzburg description")));

        let r = mirror_test(&wv("1,1,4")).unwrap();
        assert!(!r.ip && r.chi_str_mirror.is_none());
        assert!(r.notes.iter().any(|n| n.contains("formula value only")));
    }
}
