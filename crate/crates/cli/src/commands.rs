//! One function per subcommand. Each builds the text report and its JSON
//! twin from the same degree-ordered data.

use crate::{ok_str, pass, rats_json, Report};
use gs_forge_core::dims::GradedAlgebra;
use gs_forge_core::error::Error;
use gs_forge_core::group::fox::fox_derivative;
use gs_forge_core::group::presentation::{negative_value_test, vinberg_check, GroupPresentation};
use gs_forge_core::group::snf::{abelianization_rank, gs_pgroup_report, PGroupVerdict};
use gs_forge_core::group::table::{filtration_dims, FiniteGroupTable};
use gs_forge_core::group::GroupAlgebraElement;
use gs_forge_core::koszul::{
    check_exactness, check_gs_inequality, euler_identity, koszul_kernel_basis, koszul_up_to,
};
use gs_forge_core::presentation::Presentation;
use gs_forge_core::scalar::{format_rat, rat, Field, Rat};
use gs_forge_core::series::{golod_bound, golod_certificate, gs_series_check, TruncatedSeries};
use gs_forge_core::serre::{check_preconditions, SerreInstance};
use num_traits::Signed;
use serde_json::json;
use std::fmt::Write as _;

pub fn dims(text: &str, max_degree: u32) -> Result<Report, Error> {
    let alg = GradedAlgebra::new(Presentation::parse(text)?);
    let dims = alg.dims_up_to(max_degree);
    let mut report = Report::new();
    for (n, b) in dims.iter().enumerate() {
        report.line(format!("{n} {b}"));
    }
    report.set_json(json!({ "dims": dims }));
    Ok(report)
}

pub fn gs_check(text: &str, max_degree: u32) -> Result<Report, Error> {
    let alg = GradedAlgebra::new(Presentation::parse(text)?);
    alg.dims_up_to(max_degree);
    let rows: Vec<_> = (0..=max_degree)
        .map(|n| check_gs_inequality(&alg, n))
        .collect();
    let mut report = Report::new();
    let mut violations = 0;
    for row in &rows {
        report.line(format!(
            "n={} lhs={} rhs={} slack={} {}",
            row.degree,
            row.lhs,
            row.rhs,
            row.slack,
            ok_str(row.holds)
        ));
        if !row.holds {
            violations += 1;
        }
    }
    report.line(if violations == 0 {
        "all degrees OK".to_string()
    } else {
        format!("violations: {violations}")
    });
    report.ok = violations == 0;
    report.set_json(json!({
        "rows": rows.iter().map(|r| json!({
            "n": r.degree,
            "lhs": r.lhs as u64,
            "rhs": r.rhs as u64,
            "slack": r.slack as i64,
            "holds": r.holds,
        })).collect::<Vec<_>>(),
        "allHold": violations == 0,
    }));
    Ok(report)
}

pub fn koszul(text: &str, max_degree: u32, kernel_basis: bool) -> Result<Report, Error> {
    let pres = Presentation::parse(text)?;
    let alg = GradedAlgebra::new(pres);
    let slices = koszul_up_to(&alg, max_degree);
    let mut report = Report::new();
    let mut violations = 0;
    let mut degrees_json = Vec::new();
    for data in &slices {
        let n = data.degree;
        let ex = check_exactness(data);
        let eu = euler_identity(&alg, data);
        let gs = check_gs_inequality(&alg, n);
        let exact_ok = ex.holds && data.composite_is_zero;
        if !exact_ok || !eu.holds || !gs.holds {
            violations += 1;
        }
        let mut line = format!(
            "n={n} b={} src={} tgt={} rank_m1={} null_m1={} rank_m2={} null_m2={} gs_slack={} exact={} euler={}",
            data.b_n,
            data.source_dim(),
            data.target_dim(),
            data.rank_m1,
            data.nullity_m1(),
            data.rank_m2,
            data.nullity_m2(),
            gs.slack,
            pass(exact_ok),
            pass(eu.holds),
        );
        if !exact_ok {
            let _ = write!(
                line,
                " [exactness: composite_zero={} rank(M2)={} nullity(M1)={} rank(M1)={} expected={}]",
                data.composite_is_zero, ex.rank_m2, ex.nullity_m1, ex.rank_m1, ex.expected_rank_m1
            );
        }
        if !eu.holds {
            let _ = write!(line, " [euler: value={} expected={}]", eu.value, eu.expected);
        }
        report.line(line);

        let mut kernel_json = Vec::new();
        if kernel_basis {
            let kernel = koszul_kernel_basis(&alg, data);
            for (i, vec) in kernel.iter().enumerate() {
                let rendered = render_kernel_vector(&alg, data, vec);
                report.line(format!("  kernel[{i}]: {rendered}"));
                kernel_json.push(rendered);
            }
        }

        let mut obj = json!({
            "n": n,
            "b": data.b_n,
            "sourceDim": data.source_dim(),
            "targetDim": data.target_dim(),
            "rankM1": data.rank_m1,
            "nullityM1": data.nullity_m1(),
            "rankM2": data.rank_m2,
            "nullityM2": data.nullity_m2(),
            "gsSlack": gs.slack as i64,
            "exact": exact_ok,
            "euler": eu.holds,
        });
        if kernel_basis {
            obj.as_object_mut()
                .unwrap()
                .insert("kernel".into(), json!(kernel_json));
        }
        degrees_json.push(obj);
    }
    report.line(if violations == 0 {
        "all checks passed".to_string()
    } else {
        format!("violations: {violations}")
    });
    report.ok = violations == 0;
    report.set_json(json!({
        "degrees": degrees_json,
        "allPass": violations == 0,
    }));
    Ok(report)
}

/// Kernel coordinates are (relation block, standard monomial) pairs.
fn render_kernel_vector(
    alg: &GradedAlgebra,
    data: &gs_forge_core::koszul::KoszulDegree,
    vec: &gs_forge_core::linalg::SparseVec,
) -> String {
    let gens = &alg.presentation().generators;
    let mut parts = Vec::new();
    for (coord, c) in vec.iter() {
        let block = data
            .rel_blocks
            .iter()
            .rev()
            .find(|b| b.offset as u32 <= *coord)
            .expect("coordinate within a block");
        let pos = (*coord - block.offset as u32) as usize;
        let basis = alg.basis(data.degree - block.shift);
        let word = basis
            .standard_monomials()
            .nth(pos)
            .expect("standard monomial")
            .format(gens);
        parts.push(format!("{c}*(r{}, {word})", block.index));
    }
    parts.join(" + ")
}

pub fn hilbert(text: &str, max_degree: u32) -> Result<Report, Error> {
    let alg = GradedAlgebra::new(Presentation::parse(text)?);
    let hx = alg.generator_series(max_degree);
    let hr = alg.relation_series(max_degree);
    let hb = alg.hilbert(max_degree);
    let cert = gs_series_check(&alg, max_degree);
    let product = TruncatedSeries::one(max_degree as usize)
        .sub(&hx)
        .add(&hr)
        .mul(&hb);
    let mut report = Report::new();
    report.line(format!("h(X): {}", hx.format_coeffs()));
    report.line(format!("h(R): {}", hr.format_coeffs()));
    report.line(format!("H(B): {}", hb.format_coeffs()));
    report.line(format!(
        "(1 - h(X) + h(R)) * H(B): {}",
        product.format_coeffs()
    ));
    report.line(format!("certificate: {}", ok_str(cert.certified())));
    report.ok = cert.certified();
    report.set_json(json!({
        "hX": rats_json(hx.coeffs()),
        "hR": rats_json(hr.coeffs()),
        "hB": rats_json(hb.coeffs()),
        "product": rats_json(product.coeffs()),
        "certified": cert.certified(),
    }));
    Ok(report)
}

pub fn golod(gens: u64, eps: &Rat, order: usize) -> Result<Report, Error> {
    if order < 2 {
        return Err(Error::ParamOutOfRange("max degree must be >= 2".into()));
    }
    let cert = golod_certificate(gens, eps, order)?;
    let mut report = Report::new();
    report.line(format!("gens: {gens}"));
    report.line(format!("eps: {}", format_rat(eps)));
    report.line(format!("order: {order}"));
    let mut floors = Vec::new();
    for n in 2..=order {
        let bound = golod_bound(gens, eps, n as u32)?;
        let floor = bound.floor();
        report.line(format!(
            "bound n={n}: {} (exact {})",
            floor.numer(),
            format_rat(&bound)
        ));
        floors.push(floor.numer().to_string());
    }
    report.line(format!("certificate series: {}", cert.inverse.format_coeffs()));
    report.line(format!("identity product: {}", pass(cert.product_identity)));
    report.line(format!("identity inverse: {}", pass(cert.inverse_identity)));
    report.line(format!("nonnegative: {}", pass(cert.inverse_nonnegative)));
    report.line(format!("tail nonzero: {}", pass(cert.tail_nonzero)));
    report.ok = cert.certificate.certified();
    report.set_json(json!({
        "gens": gens,
        "eps": format_rat(eps),
        "order": order,
        "boundFloors": floors,
        "gamma": rats_json(cert.gamma.coeffs()),
        "inverse": rats_json(cert.inverse.coeffs()),
        "productIdentity": cert.product_identity,
        "inverseIdentity": cert.inverse_identity,
        "nonnegative": cert.inverse_nonnegative,
        "tailNonzero": cert.tail_nonzero,
        "certified": cert.certificate.certified(),
    }));
    Ok(report)
}

pub fn serre(d1: &Rat, d2: &Rat, a1: &Rat, steps: usize) -> Result<Report, Error> {
    let pre = check_preconditions(d1, d2);
    let mut report = Report::new();
    report.line(format!(
        "preconditions: d1 >= min(2, d2+1): {}; d1^2 >= 4*d2: {}",
        ok_str(pre.lower_bound),
        ok_str(pre.real_roots)
    ));
    if !pre.holds() || a1.is_negative() {
        if a1.is_negative() {
            report.line("a1 must be >= 0: FAIL");
        }
        report.line("checks not run");
        report.ok = false;
        report.set_json(json!({
            "preconditions": { "lowerBound": pre.lower_bound, "realRoots": pre.real_roots },
            "allHold": false,
        }));
        return Ok(report);
    }
    let inst = SerreInstance::new(d1.clone(), d2.clone(), a1.clone(), steps)?;
    let growth = inst.growth_witness();
    report.line(format!("lambda: {}", growth.lambda));
    report.line(format!("mu: {}", growth.mu));
    report.line(format!("mu >= 1: {}", ok_str(growth.mu_ge_one)));
    let seq = inst.minimal_sequence();
    report.line(format!(
        "a: {}",
        seq.iter().map(format_rat).collect::<Vec<_>>().join(" ")
    ));
    let mut rows_json = Vec::new();
    for row in &growth.rows {
        let step = match row.step_ge_one {
            Some(ok) => ok_str(ok),
            None => "-",
        };
        report.line(format!(
            "n={} a={} b={} lower={} step={}",
            row.n,
            format_rat(&row.a_n),
            row.b_n,
            ok_str(row.lower_bound_ok),
            step
        ));
        rows_json.push(json!({
            "n": row.n,
            "a": format_rat(&row.a_n),
            "b": row.b_n.to_string(),
            "lower": row.lower_bound_ok,
            "step": row.step_ge_one,
        }));
    }
    report.line(if growth.all_hold {
        "all checks passed"
    } else {
        "violations found"
    });
    report.ok = growth.all_hold;
    report.set_json(json!({
        "preconditions": { "lowerBound": pre.lower_bound, "realRoots": pre.real_roots },
        "lambda": growth.lambda.to_string(),
        "mu": growth.mu.to_string(),
        "a": seq.iter().map(format_rat).collect::<Vec<_>>(),
        "rows": rows_json,
        "allHold": growth.all_hold,
    }));
    Ok(report)
}

pub fn fox(text: &str) -> Result<Report, Error> {
    let pres = GroupPresentation::parse(text)?;
    let field = Field::Rational;
    let mut report = Report::new();
    report.line(format!("generators: {}", pres.generators.join(" ")));
    let mut all_ok = true;
    let mut relators_json = Vec::new();
    for (i, rel) in pres.relators.iter().enumerate() {
        report.line(format!("r{i}: {}", rel.word.format(&pres.generators)));
        let mut derivs_json = serde_json::Map::new();
        let mut acc = GroupAlgebraElement::zero(field);
        for (gi, gname) in pres.generators.iter().enumerate() {
            let d = fox_derivative(field, &rel.word, gi as u32);
            report.line(format!("  d/d({gname}): {}", d.format(&pres.generators)));
            let x_minus_one = GroupAlgebraElement::word_minus_one(
                field,
                gs_forge_core::group::GroupWord::from_syllables(&[(gi as u32, 1)]),
            );
            acc = acc
                .add(&d.mul(&x_minus_one).expect("same field"))
                .expect("same field");
            derivs_json.insert(gname.clone(), json!(d.format(&pres.generators)));
        }
        let expect = GroupAlgebraElement::word_minus_one(field, rel.word.clone());
        let ok = acc == expect;
        all_ok &= ok;
        report.line(format!("  reconstruction: {}", ok_str(ok)));
        relators_json.push(json!({
            "word": rel.word.format(&pres.generators),
            "derivatives": derivs_json,
            "reconstruction": ok,
        }));
    }
    report.line(if all_ok {
        "all reconstructions OK"
    } else {
        "reconstruction failures found"
    });
    report.ok = all_ok;
    report.set_json(json!({
        "generators": pres.generators,
        "relators": relators_json,
        "allOk": all_ok,
    }));
    Ok(report)
}

pub fn group_filtration(text: &str, prime: u64, max_n: usize) -> Result<Report, Error> {
    let table = FiniteGroupTable::parse(text)?;
    let a = filtration_dims(&table, prime, max_n)?;
    let mut report = Report::new();
    report.line(format!("order: {}", table.order));
    report.line(format!("prime: {prime}"));
    for (n, v) in a.iter().enumerate() {
        report.line(format!("{n} {v}"));
    }
    report.set_json(json!({
        "order": table.order,
        "prime": prime,
        "a": a,
    }));
    Ok(report)
}

pub fn vinberg(grp: &str, gtab: &str, prime: u64, max_n: usize) -> Result<Report, Error> {
    let pres = GroupPresentation::parse(grp)?;
    let table = FiniteGroupTable::parse(gtab)?;
    let rep = vinberg_check(&pres, &table, prime, max_n)?;
    let mut report = Report::new();
    let degree_list = rep
        .degrees
        .iter()
        .enumerate()
        .map(|(i, d)| match d {
            Some(d) => format!("r{i}={d}"),
            None => format!("r{i}>cap"),
        })
        .collect::<Vec<_>>()
        .join(" ");
    report.line(format!("relator degrees: {degree_list}"));
    report.line(format!(
        "filtration: {}",
        rep.filtration
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    for row in &rep.rows {
        report.line(format!(
            "n={} lhs={} rhs={} {}",
            row.n,
            row.lhs,
            row.rhs,
            ok_str(row.holds)
        ));
    }
    report.line(format!("series form: {}", ok_str(rep.series_holds)));

    // informational scan of 1 - h(X) + h(R) on the eighths grid
    let grid: Vec<Rat> = (1..8).map(|k| rat(k, 8)).collect();
    let order = max_n.max(rep.degrees.iter().flatten().copied().max().unwrap_or(1) as usize);
    let hx = TruncatedSeries::monomial(
        Rat::from_integer((pres.generators.len() as i64).into()),
        1,
        order,
    );
    let hr = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|n| {
                Rat::from_integer(
                    (rep.degrees.iter().filter(|d| **d == Some(n as u32)).count() as i64).into(),
                )
            })
            .collect(),
    );
    let witness = negative_value_test(&hx, &hr, &grid)?;
    match &witness {
        Some(eps) => report.line(format!(
            "negative-value scan: witness at {} (no polynomial Hilbert series)",
            format_rat(eps)
        )),
        None => report.line("negative-value scan: no witness on 1/8..7/8"),
    }

    report.line(if rep.all_hold {
        "all checks passed"
    } else {
        "violations found"
    });
    report.ok = rep.all_hold;
    report.set_json(json!({
        "degrees": rep.degrees,
        "filtration": rep.filtration,
        "rows": rep.rows.iter().map(|r| json!({
            "n": r.n,
            "lhs": r.lhs as u64,
            "rhs": r.rhs as u64,
            "holds": r.holds,
        })).collect::<Vec<_>>(),
        "seriesHolds": rep.series_holds,
        "negativeWitness": witness.as_ref().map(format_rat),
        "allHold": rep.all_hold,
    }));
    Ok(report)
}

pub fn dab(text: &str) -> Result<Report, Error> {
    let pres = GroupPresentation::parse(text)?;
    let ab = abelianization_rank(&pres);
    let pg = gs_pgroup_report(&pres);
    let mut report = Report::new();
    report.line(format!(
        "exponent matrix: {} x {}",
        ab.snf.rows, ab.snf.cols
    ));
    report.line(format!(
        "invariant factors: {}",
        if ab.invariant_factors.is_empty() {
            "none".to_string()
        } else {
            ab.invariant_factors
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    ));
    report.line(format!("d_ab: {}", ab.d_ab));
    report.line(format!(
        "abelianization finite: {}",
        if ab.is_finite { "yes" } else { "no" }
    ));
    report.line(format!("relators: {}", pg.rel_count));
    report.line(format!("threshold |X|^2/4: {}", format_rat(&pg.threshold)));
    let verdict = match pg.verdict {
        PGroupVerdict::AboveThreshold => {
            "above threshold: consistent with a finite nontrivial group"
        }
        PGroupVerdict::TrivialOrInfinite => {
            "at or below threshold: the presented group is trivial or infinite"
        }
        PGroupVerdict::NotMinimal => {
            "generating set is not minimal (d_ab < |X|): threshold not applicable"
        }
    };
    report.line(format!("verdict: {verdict}"));
    report.set_json(json!({
        "rows": ab.snf.rows,
        "cols": ab.snf.cols,
        "invariantFactors": ab.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "dAb": ab.d_ab,
        "finite": ab.is_finite,
        "relators": pg.rel_count,
        "threshold": format_rat(&pg.threshold),
        "verdict": match pg.verdict {
            PGroupVerdict::AboveThreshold => "above-threshold",
            PGroupVerdict::TrivialOrInfinite => "trivial-or-infinite",
            PGroupVerdict::NotMinimal => "not-minimal",
        },
    }));
    Ok(report)
}

