//! Subcommand implementations. Each one delegates to a single engine operation and packs the
//! result into a [`Report`].

use std::fs;

use serde_json::{json, Value};

use koszul_core::corpus::{builtin_corpus, builtin_representations, corpus_entry, Kind};
use koszul_core::dsl::{parse_potential, parse_presentation, parse_representation, PotentialDocument, PresentationDocument};
use koszul_core::exactlin::{FieldConfig, SparseMatrix};
use koszul_core::homogeneous::koszul::{GorensteinReport, KoszulReport, BIMODULE_CAP};
use koszul_core::homogeneous::{
    gorenstein_check, is_koszul, minimal_resolution, FrobeniusVerdict, GorensteinVerdict, GradedAlgebra,
    HomogeneousPresentation, HomologyReport, KoszulVerdict, Workspace, YonedaAlgebra,
};
use koszul_core::nonhomogeneous::{
    ce_complex, check_curved, from_curved_dga, lie_prealgebra_certify, pbw_check, to_curved_dga, AbcReport,
    CurvedChecks, CurvedDga, FiltrationReport, NonhomogeneousPresentation,
};
use koszul_core::potential::{
    automorphisms, check_preregular, eqreg_check, extract_potential, frobenius_quotient, hochschild_cycle_check,
    potential_algebra, w_spaces, Potential,
};
use koszul_core::{Error, Result};

use crate::report::{verdict, Report};

pub const COMMANDS: &[&str] = &[
    "hilbert",
    "dual",
    "ncomplex",
    "koszul",
    "gorenstein",
    "resolution",
    "yoneda",
    "potential-check",
    "potential-build",
    "potential-extract",
    "frobenius",
    "hochschild-cycle",
    "pbw",
    "curved",
    "certify-lie",
    "ce",
    "corpus",
];

#[derive(Clone, Debug)]
pub struct Options {
    pub cap: usize,
    /// Overrides the field declared in the document.
    pub field: Option<FieldConfig>,
    pub witnesses: bool,
    /// `N` for the potential commands.
    pub big_n: usize,
    pub representation: Option<Source>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: 8,
            field: None,
            witnesses: false,
            big_n: 2,
            representation: None,
        }
    }
}

/// Input text with a display name. `builtin:<name>` selects a corpus document.
#[derive(Clone, Debug)]
pub struct Source {
    pub name: String,
    pub text: String,
}

impl Source {
    pub fn load(spec: &str) -> Result<Source> {
        if let Some(name) = spec.strip_prefix("builtin:") {
            if let Some(e) = corpus_entry(name) {
                return Ok(Source {
                    name: name.into(),
                    text: e.text.into(),
                });
            }
            if let Some(r) = builtin_representations().into_iter().find(|r| r.name == name) {
                return Ok(Source {
                    name: name.into(),
                    text: r.text.into(),
                });
            }
            return Err(Error::Io(format!("no built-in document named '{name}'")));
        }
        let text = fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        Ok(Source {
            name: spec.into(),
            text,
        })
    }
}

pub fn run(command: &str, input: Option<&Source>, opts: &Options) -> Result<Report> {
    if command == "corpus" {
        return corpus(opts);
    }
    if !COMMANDS.contains(&command) {
        return Err(Error::Semantic(format!("unknown subcommand '{command}'")));
    }
    let src = input.ok_or_else(|| Error::Semantic(format!("'{command}' needs an input document")))?;
    let (field, results) = match command {
        "hilbert" => with_homogeneous(src, opts, hilbert)?,
        "dual" => with_homogeneous(src, opts, dual)?,
        "ncomplex" => with_homogeneous(src, opts, ncomplex)?,
        "koszul" => with_homogeneous(src, opts, koszul)?,
        "gorenstein" => with_homogeneous(src, opts, gorenstein)?,
        "resolution" => with_homogeneous(src, opts, resolution)?,
        "yoneda" => with_homogeneous(src, opts, yoneda)?,
        "potential-extract" => with_homogeneous(src, opts, potential_extract)?,
        "potential-check" => with_potential(src, opts, potential_check)?,
        "potential-build" => with_potential(src, opts, potential_build)?,
        "frobenius" => with_potential(src, opts, frobenius)?,
        "hochschild-cycle" => with_potential(src, opts, hochschild)?,
        "pbw" => with_nonhomogeneous(src, opts, pbw)?,
        "certify-lie" => with_nonhomogeneous(src, opts, certify_lie)?,
        "ce" => with_nonhomogeneous(src, opts, ce)?,
        "curved" => curved(src, opts)?,
        _ => unreachable!("listed command"),
    };
    let mut text = src.text.clone();
    if let (true, Some(rep)) = (command == "ce", &opts.representation) {
        text.push_str(&rep.text);
    }
    Ok(Report::new(command, &src.name, &text, field, opts.cap, results))
}

fn document(src: &Source) -> Result<PresentationDocument> {
    parse_presentation(&src.text)
}

fn field_of(declared: FieldConfig, opts: &Options) -> FieldConfig {
    opts.field.unwrap_or(declared)
}

fn with_homogeneous(
    src: &Source,
    opts: &Options,
    f: fn(&HomogeneousPresentation, &Options) -> Result<Value>,
) -> Result<(FieldConfig, Value)> {
    let doc = document(src)?;
    let field = field_of(doc.field, opts);
    if doc.differentials.is_empty() && doc.curvature.is_none() {
        if let Ok(p) = doc.to_nonhomogeneous(field) {
            if !p.is_homogeneous() {
                let mut out = f(&p.homogeneous_part(), opts)?;
                out["homogeneous_part_only"] = Value::Bool(true);
                return Ok((field, out));
            }
        }
    }
    let pres = doc.to_homogeneous(field)?;
    Ok((field, f(&pres, opts)?))
}

fn with_nonhomogeneous(
    src: &Source,
    opts: &Options,
    f: fn(&NonhomogeneousPresentation, &Options) -> Result<Value>,
) -> Result<(FieldConfig, Value)> {
    let doc = document(src)?;
    let field = field_of(doc.field, opts);
    let pres = doc.to_nonhomogeneous(field)?;
    Ok((field, f(&pres, opts)?))
}

fn with_potential(src: &Source, opts: &Options, f: fn(&Potential, &Options) -> Result<Value>) -> Result<(FieldConfig, Value)> {
    let doc: PotentialDocument = parse_potential(&src.text)?;
    let field = field_of(doc.field, opts);
    let w = doc.to_potential(field)?;
    Ok((field, f(&w, opts)?))
}

fn matrix_json(m: &SparseMatrix) -> Value {
    Value::Array(
        m.to_dense()
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

fn homology_json(h: &HomologyReport) -> Value {
    Value::Array(
        h.nonzero()
            .map(|((i, k), dim)| json!({"homological": i, "internal": k, "dim": dim}))
            .collect(),
    )
}

fn koszul_verdict_json(v: &KoszulVerdict, cap: usize) -> Value {
    match v {
        KoszulVerdict::KoszulUpToCap => verdict("koszul_up_to_cap", cap, json!({})),
        KoszulVerdict::FailsAt { i, k } => {
            verdict("not_koszul", cap, json!({"homological_degree": i, "internal_degree": k}))
        }
    }
}

fn gorenstein_verdict_json(v: &GorensteinVerdict, cap: usize) -> Value {
    match v {
        GorensteinVerdict::GorensteinUpToCap { d, shift } => {
            verdict("gorenstein_up_to_cap", cap, json!({"global_dimension": d, "shift": shift}))
        }
        GorensteinVerdict::Fails { reason } => verdict("not_gorenstein", cap, json!({"reason": reason})),
        GorensteinVerdict::Inconclusive { reason } => verdict("inconclusive", cap, json!({"reason": reason})),
    }
}

fn hilbert(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let alg = GradedAlgebra::new(pres, opts.cap)?;
    Ok(json!({"hilbert": alg.hilbert(), "degrees": format!("0..={}", opts.cap)}))
}

fn dual(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let d = pres.koszul_dual();
    let text = PresentationDocument::from_homogeneous(&d).map(|doc| doc.print());
    let alg = GradedAlgebra::new(&d, opts.cap)?;
    let involution = d.koszul_dual().relations == pres.relations;
    Ok(json!({
        "dual": text,
        "dual_relations": d.relations.basis().iter().map(|r| d.render_tensor(r, d.n)).collect::<Vec<_>>(),
        "dual_hilbert": alg.hilbert(),
        "involution": verdict(if involution { "holds" } else { "fails" }, opts.cap, json!({})),
    }))
}

fn ncomplex(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let ws = Workspace::new(pres, opts.cap)?;
    let n = pres.n;
    let left = ws.koszul_n_complex()?.power_violations(n);
    let right = ws.right_n_complex()?.power_violations(n);
    let contraction = ws.contraction_left()?.power_violations(2);
    let bimodule_cap = opts.cap.min(BIMODULE_CAP);
    let bimodule = ws.contraction_bimodule(bimodule_cap)?.power_violations(2);
    let check = |v: &Vec<(usize, i64)>, cap: usize| {
        let mut details = json!({});
        if opts.witnesses && !v.is_empty() {
            details = json!({"violations": v.iter().map(|(i, k)| json!([i, k])).collect::<Vec<_>>()});
        }
        verdict(if v.is_empty() { "holds" } else { "fails" }, cap, details)
    };
    Ok(json!({
        "N": n,
        "koszul_betti": ws.koszul_betti(),
        "d_power_N_left": check(&left, opts.cap),
        "d_power_N_right": check(&right, opts.cap),
        "contraction_square_left": check(&contraction, opts.cap),
        "contraction_square_bimodule": check(&bimodule, bimodule_cap),
    }))
}

fn koszul_json(k: &KoszulReport, opts: &Options) -> Value {
    let mut v = koszul_verdict_json(&k.verdict, k.cap);
    if opts.witnesses {
        v["homology"] = homology_json(&k.homology);
    }
    json!({
        "left": v,
        "bimodule": koszul_verdict_json(&k.bimodule_verdict, k.bimodule_cap),
        "routes_agree": k.agrees,
    })
}

fn koszul(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let ws = Workspace::new(pres, opts.cap)?;
    let k = is_koszul(&ws)?;
    Ok(json!({
        "hilbert": ws.alg.hilbert(),
        "koszul_betti": ws.koszul_betti(),
        "koszul": koszul_json(&k, opts),
    }))
}

fn gorenstein_json(g: &GorensteinReport, opts: &Options) -> Value {
    let mut v = gorenstein_verdict_json(&g.verdict, g.cap);
    v["betti"] = json!(g.betti);
    v["global_dimension"] = json!(g.global_dimension);
    if opts.witnesses {
        v["ext"] = homology_json(&g.cohomology);
    }
    v
}

fn gorenstein(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let ws = Workspace::new(pres, opts.cap)?;
    let k = is_koszul(&ws)?;
    if let KoszulVerdict::FailsAt { .. } = k.verdict {
        return Ok(json!({"koszul": koszul_json(&k, opts), "gorenstein": verdict("not_applicable", opts.cap, json!({"reason": "not Koszul"}))}));
    }
    let g = gorenstein_check(&ws)?;
    Ok(json!({"koszul": koszul_json(&k, opts), "gorenstein": gorenstein_json(&g, opts)}))
}

fn resolution(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let alg = GradedAlgebra::new(pres, opts.cap)?;
    let b = minimal_resolution(&alg)?;
    let ws = Workspace::new(pres, opts.cap)?;
    Ok(json!({
        "betti_graded": b.graded,
        "betti": b.dims,
        "global_dimension": verdict(
            if b.global_dimension_up_to_cap.is_some() { "finite_up_to_cap" } else { "not_determined" },
            opts.cap,
            json!({"value": b.global_dimension_up_to_cap}),
        ),
        "koszul_betti": ws.koszul_betti(),
    }))
}

fn yoneda(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let ws = Workspace::new(pres, opts.cap)?;
    let y = YonedaAlgebra::new(&ws)?;
    let dims: Vec<usize> = (0..=y.max_degree()).map(|i| y.dim(i).unwrap_or(0)).collect();
    let frob = match y.frobenius()? {
        FrobeniusVerdict::Frobenius { top } => verdict("frobenius", opts.cap, json!({"top_degree": top})),
        FrobeniusVerdict::NotFrobenius { reason } => verdict("not_frobenius", opts.cap, json!({"reason": reason})),
    };
    Ok(json!({"N": y.big_n, "ext_dims": dims, "frobenius": frob}))
}

fn potential_extract(pres: &HomogeneousPresentation, opts: &Options) -> Result<Value> {
    let ws = Workspace::new(pres, opts.cap)?;
    let g = gorenstein_check(&ws)?;
    let w = extract_potential(&ws, &g)?;
    let pre = check_preregular(&w)?;
    Ok(json!({
        "gorenstein": gorenstein_json(&g, opts),
        "potential": PotentialDocument::from_potential(&w).map(|d| d.print()),
        "m": w.m,
        "twist": pre.twist.as_ref().map(|t| matrix_json(&t.q)),
        "twist_is_identity": pre.twist.as_ref().map(|t| t.is_identity()),
        "regenerates_relations": potential_algebra(&w, pres.n)?.relations == pres.relations,
    }))
}

fn potential_check(w: &Potential, opts: &Options) -> Result<Value> {
    let r = check_preregular(w)?;
    Ok(json!({
        "m": w.m,
        "one_site_nondegenerate": r.one_site,
        "twist": r.twist.as_ref().map(|t| matrix_json(&t.q)),
        "q_invariant": r.q_invariant,
        "preregular": verdict(if r.preregular() { "preregular" } else { "not_preregular" }, opts.cap, json!({})),
    }))
}

fn potential_build(w: &Potential, opts: &Options) -> Result<Value> {
    let pres = potential_algebra(w, opts.big_n)?;
    let ws = w_spaces(w, opts.big_n)?;
    let alg = GradedAlgebra::new(&pres, opts.cap)?;
    let eq = eqreg_check(w, opts.big_n, opts.cap)?;
    Ok(json!({
        "N": opts.big_n,
        "relations": pres.relations.basis().iter().map(|r| pres.render_tensor(r, pres.n)).collect::<Vec<_>>(),
        "presentation": PresentationDocument::from_homogeneous(&pres).map(|d| d.print()),
        "hilbert": alg.hilbert(),
        "w_dims": ws.dims(),
        "w_complex": verdict(
            if eq.holds() { "acyclic_and_koszul_gorenstein" } else { "fails" },
            eq.cap,
            json!({
                "w_acyclic": eq.w_acyclic,
                "w_equals_koszul": eq.equals_koszul,
                "w_bimodule_acyclic": eq.w_bimodule_acyclic,
                "bimodule_cap": eq.bimodule_cap,
                "koszul": koszul_verdict_json(&eq.koszul, eq.cap),
                "gorenstein": eq.gorenstein.as_ref().map(|g| gorenstein_verdict_json(g, eq.cap)),
                "consistent": eq.consistent,
            }),
        ),
    }))
}

fn frobenius(w: &Potential, opts: &Options) -> Result<Value> {
    let f = frobenius_quotient(w, opts.big_n)?;
    let a = automorphisms(w, opts.big_n, w.m)?;
    Ok(json!({
        "dual_dims": f.dual_dims,
        "quotient_dims": f.dims,
        "modular_identity": verdict(if f.modular_holds { "holds" } else { "fails" }, w.m, json!({})),
        "graded_frobenius": verdict(
            if f.is_graded_frobenius() { "frobenius" } else { "not_frobenius" },
            w.m,
            json!({"nondegenerate": f.nondegenerate}),
        ),
        "twist": matrix_json(&a.twist.q),
    }))
}

fn hochschild(w: &Potential, opts: &Options) -> Result<Value> {
    let ok = hochschild_cycle_check(w, opts.big_n)?;
    Ok(json!({"cycle": verdict(if ok { "cycle" } else { "not_a_cycle" }, w.m, json!({}))}))
}

fn abc_json(abc: &AbcReport, pres: &NonhomogeneousPresentation, opts: &Options) -> Value {
    let mut details = json!({"overlap_dim": abc.v_dim, "a": abc.a, "b": abc.b, "c": abc.c});
    if let Some(f) = &abc.first_failure {
        details["failing_condition"] = json!(f.condition.to_string());
        if opts.witnesses {
            let h = pres.homogeneous_part();
            details["witness"] = json!(h.render_tensor(&f.witness, pres.n + 1));
            details["defect"] = json!(h.render_tensor(&f.defect, f.defect_degree));
        }
    }
    verdict(if abc.holds() { "holds" } else { "fails" }, pres.n + 1, details)
}

fn pbw_json(r: &FiltrationReport, pres: &NonhomogeneousPresentation, opts: &Options) -> Value {
    json!({
        "filtration_dims": r.filtration_dims,
        "homogeneous_cumulative": r.homogeneous_cumulative,
        "gr_dims": r.gr_dims,
        "pbw": verdict(
            if r.pbw_holds() { "pbw_up_to_cap" } else { "not_pbw" },
            r.cap,
            json!({"first_failure": r.first_failure()}),
        ),
        "homogeneous_koszul": koszul_verdict_json(&r.koszul, r.cap),
        "conditions_abc": abc_json(&r.abc, pres, opts),
        "hypotheses_hold": r.hypotheses_hold(),
    })
}

fn pbw(pres: &NonhomogeneousPresentation, opts: &Options) -> Result<Value> {
    Ok(pbw_json(&pbw_check(pres, opts.cap)?, pres, opts))
}

fn curved_checks_json(c: &CurvedChecks, opts: &Options) -> Value {
    let mut details = json!({"a": c.a, "b": c.b, "c": c.c});
    if let Some(f) = &c.first_failure {
        details["failing_condition"] = json!(format!("{}′", f.condition));
        if opts.witnesses {
            details["defect_coordinates"] = json!(f.defect.iter().map(|(i, s)| json!([i, s.to_string()])).collect::<Vec<_>>());
        }
    }
    verdict(if c.holds() { "holds" } else { "fails" }, 3, details)
}

fn dga_json(c: &CurvedDga) -> Result<Value> {
    let (delta, f) = c.render()?;
    Ok(json!({
        "dual_relations": c.dual.relations.basis().iter().map(|r| c.dual.render_tensor(r, 2)).collect::<Vec<_>>(),
        "differential": c.dual.generators.iter().zip(&delta).map(|(g, d)| json!({"generator": g, "value": d})).collect::<Vec<_>>(),
        "curvature": f,
    }))
}

fn curved(src: &Source, opts: &Options) -> Result<(FieldConfig, Value)> {
    let doc = document(src)?;
    let field = field_of(doc.field, opts);
    if !doc.differentials.is_empty() || doc.curvature.is_some() {
        let c = doc.to_curved_dga(field)?;
        let checks = check_curved(&c)?;
        let mut out = json!({"curved": dga_json(&c)?, "conditions_prime": curved_checks_json(&checks, opts)});
        if checks.holds() {
            let p = from_curved_dga(&c)?;
            let h = p.homogeneous_part();
            out["nonhomogeneous_relations"] = json!((0..p.relations.dim())
                .map(|j| {
                    let parts = p.relation_parts(j);
                    parts
                        .iter()
                        .enumerate()
                        .rev()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(n, v)| h.render_tensor(v, n))
                        .collect::<Vec<_>>()
                        .join(" + ")
                })
                .collect::<Vec<_>>());
        }
        return Ok((field, out));
    }
    let pres = doc.to_nonhomogeneous(field)?;
    let r = to_curved_dga(&pres)?;
    Ok((
        field,
        json!({
            "curved": dga_json(&r.dga)?,
            "flat": r.dga.is_flat(),
            "conditions_prime": curved_checks_json(&r.checks, opts),
            "conditions_abc": abc_json(&r.abc, &pres, opts),
            "checkers_agree": true,
        }),
    ))
}

fn certify_lie(pres: &NonhomogeneousPresentation, opts: &Options) -> Result<Value> {
    let l = lie_prealgebra_certify(pres, opts.cap)?;
    Ok(json!({
        "lie_prealgebra": verdict(if l.certified() { "certified_up_to_cap" } else { "not_certified" }, opts.cap, json!({})),
        "koszul": koszul_verdict_json(&l.koszul, opts.cap),
        "gorenstein": l.gorenstein.as_ref().map(|g| gorenstein_verdict_json(g, opts.cap)),
        "pbw": pbw_json(&l.pbw, pres, opts),
        "dual_dims": l.dual_dims,
        "dual_differential_squares_to_zero": l.dual.checks.holds(),
        "dual_frobenius": match &l.dual_frobenius {
            FrobeniusVerdict::Frobenius { top } => verdict("frobenius", opts.cap, json!({"top_degree": top})),
            FrobeniusVerdict::NotFrobenius { reason } => verdict("not_frobenius", opts.cap, json!({"reason": reason})),
        },
    }))
}

fn ce(pres: &NonhomogeneousPresentation, opts: &Options) -> Result<Value> {
    let src = opts
        .representation
        .as_ref()
        .ok_or_else(|| Error::Semantic("'ce' needs a representation (--rep)".into()))?;
    let rep = parse_representation(&src.text)?.to_representation(pres)?;
    let c = ce_complex(pres, &rep, opts.cap)?;
    let label = if rep.side == koszul_core::homogeneous::Side::Left { "cohomology" } else { "homology" };
    Ok(json!({
        "representation": src.name,
        "dims": c.dims,
        "square_zero": verdict(if c.square_zero { "holds" } else { "fails" }, opts.cap, json!({})),
        label: c.homology,
    }))
}

/// Runs the invariant suite over every built-in document.
fn corpus(opts: &Options) -> Result<Report> {
    let field = opts.field.unwrap_or(FieldConfig::Rational);
    let mut entries = Vec::new();
    let mut all_text = String::new();
    for e in builtin_corpus() {
        all_text.push_str(e.text);
        let mut out = json!({"name": e.name});
        let pres = e.homogeneous(field)?;
        let ws = Workspace::new(&pres, opts.cap)?;
        out["hilbert"] = json!(ws.alg.hilbert());
        out["d_power_N"] = json!(ws.koszul_n_complex()?.power_violations(pres.n).is_empty()
            && ws.right_n_complex()?.power_violations(pres.n).is_empty());
        let small = Workspace::new(&pres, opts.cap.min(BIMODULE_CAP))?;
        out["contraction_square"] = json!(small.contraction_left()?.power_violations(2).is_empty()
            && small.contraction_bimodule(BIMODULE_CAP)?.power_violations(2).is_empty());
        out["duality_involution"] = json!(pres.koszul_dual().koszul_dual().relations == pres.relations);
        let k = is_koszul(&ws)?;
        out["koszul"] = koszul_verdict_json(&k.verdict, opts.cap);
        out["koszul_routes_agree"] = json!(k.agrees);
        if k.verdict == KoszulVerdict::KoszulUpToCap {
            out["gorenstein"] = gorenstein_verdict_json(&gorenstein_check(&ws)?.verdict, opts.cap);
        }
        if let Some(p) = e.nonhomogeneous(field)? {
            if !p.is_homogeneous() {
                let r = pbw_check(&p, opts.cap.min(6))?;
                out["pbw"] = verdict(if r.pbw_holds() { "pbw_up_to_cap" } else { "not_pbw" }, r.cap, json!({"filtration_dims": r.filtration_dims}));
            }
            if p.n == 2 {
                let c = to_curved_dga(&p)?;
                out["curved_checkers_agree"] = json!(c.checks.holds() == c.abc.holds());
            }
        }
        if let Some(c) = e.curved(field)? {
            out["curved_conditions"] = json!(check_curved(&c)?.holds());
        }
        if let Kind::Potential { big_n } = e.kind {
            let w = e.potential(field)?;
            let f = frobenius_quotient(&w, big_n)?;
            out["modular_identity"] = json!(f.modular_holds);
            out["graded_frobenius"] = json!(f.is_graded_frobenius());
            out["eqreg"] = json!(eqreg_check(&w, big_n, opts.cap)?.holds());
        }
        entries.push(out);
    }
    let mut reps = Vec::new();
    for r in builtin_representations() {
        all_text.push_str(r.text);
        let entry = corpus_entry(r.algebra).expect("known algebra");
        let p = entry.nonhomogeneous(field)?.expect("presentation");
        let c = ce_complex(&p, &r.build(field)?, opts.cap)?;
        reps.push(json!({"name": r.name, "algebra": r.algebra, "square_zero": c.square_zero, "homology": c.homology}));
    }
    const INVARIANTS: &[&str] = &[
        "d_power_N",
        "contraction_square",
        "duality_involution",
        "koszul_routes_agree",
        "curved_checkers_agree",
    ];
    let mut failures: Vec<String> = entries
        .iter()
        .flat_map(|e| {
            INVARIANTS
                .iter()
                .filter(|k| e[**k] == Value::Bool(false))
                .map(move |k| format!("{}: {k}", e["name"].as_str().unwrap_or_default()))
        })
        .collect();
    failures.extend(
        reps.iter()
            .filter(|r| r["square_zero"] == Value::Bool(false))
            .map(|r| format!("{}: square_zero", r["name"].as_str().unwrap_or_default())),
    );
    let results = json!({
        "invariants": verdict(if failures.is_empty() { "hold" } else { "fail" }, opts.cap, json!({"failures": failures})),
        "entries": entries,
        "representations": reps,
        "pbw_cap": opts.cap.min(6),
    });
    Ok(Report::new("corpus", "builtin", &all_text, field, opts.cap, results))
}
