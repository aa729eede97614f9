//! Command implementations: contract a job, verify properties, run the
//! bundled corpus.

use crate::job::Loaded;
use crate::report::{Caps, GenEntry, OpResult, Report};
use contralg::contraction::{
    chart_gluing, contract, double_contract, fiber_descent_check, flatness_check,
    graded_fiber_check, localize_check, rees_comparison, tensor_compat_check, unit_fiber_iso,
    ContractionPresentation,
};
use contralg::hopf::{
    cartan_motion_check, contract_hopf, sl2n_embedding_check, validate_hopf,
    verify_contracted_hopf, ContractedHopf,
};
use contralg::ideals::{GroebnerConfig, Ideal};
use contralg::liecon::{contract_derivation_action, contract_lie};
use contralg::poly::{MonomialOrder, Poly, Ring};
use contralg::{Error, Result};

pub struct RunOpts {
    pub cfg: GroebnerConfig,
    pub order: MonomialOrder,
    pub raw_4lambda: bool,
    pub chart_gluing: bool,
}

impl RunOpts {
    pub fn caps(&self) -> Caps {
        Caps {
            max_pairs: self.cfg.max_pairs,
            max_degree: self.cfg.max_degree,
        }
    }
}

/// Exit status classes per the CLI contract.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => 2,
        _ => 1,
    }
}

fn relations_in_order(c: &ContractionPresentation, opts: &RunOpts) -> Result<Vec<String>> {
    let ring = &c.algebra.ring;
    if opts.order == MonomialOrder::GrevLex {
        return Ok(c
            .algebra
            .relations
            .basis(&opts.cfg)?
            .iter()
            .map(|p| p.to_string())
            .collect());
    }
    let reordered = Ring::new(ring.field.clone(), ring.vars.clone(), opts.order.clone());
    let idmap: Vec<usize> = (0..ring.nvars()).collect();
    let gens: Vec<Poly> = c
        .algebra
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&idmap, &reordered))
        .collect();
    let ideal = Ideal::new(&reordered, gens);
    Ok(ideal
        .basis(&opts.cfg)?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

/// The 4Λ closed-immersion presentation: one generator block
/// (x11, x22, x12, x21) per source generator, no dedup, no zero dropping.
fn contract_raw(loaded: &Loaded, opts: &RunOpts) -> Result<OpResult> {
    let a = &loaded.algebra;
    let theta = &loaded.theta;
    let field = &a.ring.field;
    let half = field.from_ratio(1, 2)?;
    let n = a.nvars();
    let mut wvars = a.ring.vars.clone();
    wvars.push("s".into());
    wvars.push("u".into());
    let wring = Ring::new(field.clone(), wvars, MonomialOrder::GrevLex);
    let emb: Vec<usize> = (0..n).collect();
    let mut wrels: Vec<Poly> = a
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&emb, &wring))
        .collect();
    let s = Poly::var(&wring, n);
    let u = Poly::var(&wring, n + 1);
    wrels.push(s.mul(&u).sub(&Poly::one(&wring)));

    let mut new_vars = vec!["t".to_string()];
    let mut images = vec![s.mul(&s)];
    let mut tags = vec![];
    for i in 0..n {
        let x = Poly::var(&wring, i);
        let tx = theta.map.images[i].map_vars(&emb, &wring);
        let plus = x.add(&tx).scalar_mul(&half);
        let minus = x.sub(&tx).scalar_mul(&half);
        let name = &a.ring.vars[i];
        new_vars.push(format!("{name}_11"));
        images.push(plus.clone());
        tags.push("plus");
        new_vars.push(format!("{name}_22"));
        images.push(plus);
        tags.push("plus");
        new_vars.push(format!("{name}_12"));
        images.push(s.mul(&minus));
        tags.push("minus_times");
        new_vars.push(format!("{name}_21"));
        images.push(u.mul(&minus));
        tags.push("minus_over");
    }
    let kernel = contralg::ideals::map_kernel(&wring, &wrels, &new_vars, &images, &opts.cfg)?;
    let generators = (1..new_vars.len())
        .map(|i| GenEntry {
            name: new_vars[i].clone(),
            tag: tags[i - 1].to_string(),
            witness: images[i].to_string(),
        })
        .collect();
    let relations = kernel
        .basis(&opts.cfg)?
        .iter()
        .map(|p| p.to_string())
        .collect();
    Ok(OpResult::Contract {
        generators,
        relations,
    })
}

pub fn run_contract(loaded: &Loaded, opts: &RunOpts) -> Result<Report> {
    let mut results = Vec::new();
    if opts.raw_4lambda {
        results.push(contract_raw(loaded, opts)?);
    } else {
        let c = contract(&loaded.algebra, &loaded.theta, &opts.cfg)?;
        let generators = (1..c.algebra.ring.nvars())
            .map(|i| GenEntry {
                name: c.algebra.ring.vars[i].clone(),
                tag: c.tags[i - 1].as_str().to_string(),
                witness: c.witness[i].to_string(),
            })
            .collect();
        let relations = relations_in_order(&c, opts)?;
        results.push(OpResult::Contract {
            generators,
            relations,
        });
    }
    Ok(Report {
        job: loaded.name.clone(),
        field: loaded.field.spec().to_string(),
        caps: opts.caps(),
        results,
        ok: true,
    })
}

struct VerifyState<'a> {
    loaded: &'a Loaded,
    cfg: &'a GroebnerConfig,
    contraction: Option<ContractionPresentation>,
    hopf_contraction: Option<ContractedHopf>,
}

impl<'a> VerifyState<'a> {
    fn contraction(&mut self) -> Result<&ContractionPresentation> {
        if self.contraction.is_none() {
            self.contraction = Some(contract(
                &self.loaded.algebra,
                &self.loaded.theta,
                self.cfg,
            )?);
        }
        Ok(self.contraction.as_ref().unwrap())
    }

    fn contracted_hopf(&mut self) -> Result<&ContractedHopf> {
        if self.hopf_contraction.is_none() {
            let h = self
                .loaded
                .hopf
                .as_ref()
                .ok_or_else(|| Error::Invalid("property requires hopf data".into()))?;
            self.hopf_contraction = Some(contract_hopf(h, &self.loaded.theta, self.cfg)?);
        }
        Ok(self.hopf_contraction.as_ref().unwrap())
    }
}

fn verdict(ok: bool) -> String {
    if ok {
        "pass".into()
    } else {
        "fail".into()
    }
}

fn series_str(s: &[u64]) -> String {
    let parts: Vec<String> = s.iter().map(|d| d.to_string()).collect();
    parts.join(", ")
}

fn run_property(state: &mut VerifyState, prop: &str, opts: &RunOpts) -> Result<(bool, OpResult)> {
    let cfg = &opts.cfg.clone();
    let loaded = state.loaded;
    let (ok, detail): (bool, Vec<String>) = match prop {
        "flat" => {
            let c = state.contraction()?;
            let ok = flatness_check(c, cfg)?;
            (
                ok,
                vec!["t is a non-zerodivisor modulo the relations".into()],
            )
        }
        "fiber0" => {
            let c = state.contraction()?;
            let fiber = c.fiber_at_zero()?;
            let gv = graded_fiber_check(c, 6, cfg)?;
            let mut detail = Vec::new();
            if fiber.algebra.is_zero_ring(cfg)? {
                detail.push("fiber at t=0: zero ring".into());
            } else {
                for rel in fiber.algebra.relations.basis(cfg)? {
                    detail.push(format!("fiber relation: {rel}"));
                }
            }
            detail.push(format!(
                "hilbert (fiber):  {}",
                series_str(&gv.series_fiber)
            ));
            detail.push(format!(
                "hilbert (graded): {}",
                series_str(&gv.series_graded)
            ));
            (gv.holds, detail)
        }
        "unit_fiber" => {
            let t0 = loaded.t0.clone();
            let alpha = loaded.alpha.clone();
            let c = state.contraction()?;
            let v = unit_fiber_iso(c, &t0, &alpha, cfg)?;
            let detail = v
                .forward
                .images
                .iter()
                .enumerate()
                .map(|(i, img)| format!("{} -> {}", v.forward.source.ring.vars[i], img))
                .collect();
            (v.holds, detail)
        }
        "descent" => {
            let t0 = loaded.descent_t0.clone();
            let c = state.contraction()?;
            let v = fiber_descent_check(c, &t0, cfg)?;
            (
                v.holds,
                vec![format!(
                    "quadratic descent verified over {}",
                    v.forward.target.ring.field.spec()
                )],
            )
        }
        "rees" => {
            let c = state.contraction()?;
            let v = rees_comparison(c, cfg)?;
            (
                v.holds,
                vec!["extended Rees comparison after t = s^2".into()],
            )
        }
        "localize" => {
            let f = loaded
                .localize_f
                .clone()
                .ok_or_else(|| Error::Invalid("localize requires params.localize_f".into()))?;
            let v = localize_check(&loaded.algebra, &loaded.theta, &f, cfg)?;
            let mut detail = vec![
                format!("f = {f} ({})", if v.sign == 1 { "plus" } else { "minus" }),
                format!("bold f = {}", v.bold_f),
            ];
            if opts.chart_gluing {
                let g = chart_gluing(&loaded.algebra, &loaded.theta, &f, cfg)?;
                detail.push(format!("transition: {}", g.transition));
                (v.holds && g.verdict, detail)
            } else {
                (v.holds, detail)
            }
        }
        "double" => {
            let eta = loaded
                .theta2
                .as_ref()
                .ok_or_else(|| Error::Invalid("double requires involution2".into()))?;
            let (dc, symmetric) = double_contract(&loaded.algebra, &loaded.theta, eta, cfg)?;
            let mut detail = Vec::new();
            for (i, v) in dc.algebra.ring.vars.iter().enumerate().skip(2) {
                detail.push(format!("gen {} ({})", v, dc.tags[i - 2].as_str()));
            }
            for rel in dc.algebra.relations.basis(cfg)? {
                detail.push(format!("rel {rel}"));
            }
            detail.push("symmetry: ideals agree under the (t1, t2) swap".into());
            (symmetric, detail)
        }
        "tensor" => {
            let (b, eta) = loaded
                .tensor_with
                .as_ref()
                .ok_or_else(|| Error::Invalid("tensor requires params.tensor_with".into()))?;
            let ok = tensor_compat_check(&loaded.algebra, &loaded.theta, b, eta, cfg)?;
            (
                ok,
                vec!["contract(A (x) B) = contract(A) (x)_{k[t]} contract(B)".into()],
            )
        }
        "hopf" => {
            let h = loaded
                .hopf
                .as_ref()
                .ok_or_else(|| Error::Invalid("hopf requires hopf data".into()))?;
            validate_hopf(h, cfg)?;
            let ch = state.contracted_hopf()?;
            verify_contracted_hopf(ch, cfg)?;
            let mut detail = Vec::new();
            let cring = &ch.contraction.algebra.ring;
            for (i, img) in ch.comul.iter().enumerate() {
                detail.push(format!("comul {} -> {}", cring.vars[1 + i], img));
            }
            for (i, v) in ch.counit.iter().enumerate() {
                detail.push(format!(
                    "counit {} -> {}",
                    cring.vars[1 + i],
                    cring.field.display(v)
                ));
            }
            for (i, img) in ch.antipode.iter().enumerate() {
                detail.push(format!("antipode {} -> {}", cring.vars[1 + i], img));
            }
            (true, detail)
        }
        "cartan" => {
            let h = loaded
                .hopf
                .as_ref()
                .ok_or_else(|| Error::Invalid("cartan requires hopf data".into()))?
                .clone();
            let ch = state.contracted_hopf()?;
            let v = cartan_motion_check(&h, ch, cfg)?;
            (
                v.holds,
                vec![
                    format!("graded algebra part: {}", verdict(v.graded_algebra_ok)),
                    format!("fixed subgroup quotient: {}", verdict(v.fixed_subgroup_ok)),
                    format!(
                        "minus generators coact linearly: {}",
                        verdict(v.minus_linear_ok)
                    ),
                ],
            )
        }
        "embedding" => {
            let h = loaded
                .hopf
                .as_ref()
                .ok_or_else(|| Error::Invalid("embedding requires hopf data".into()))?;
            let matrix = loaded
                .hopf_matrix
                .as_ref()
                .ok_or_else(|| Error::Invalid("embedding requires hopf.matrix".into()))?;
            let v = sl2n_embedding_check(h, &loaded.theta, matrix, cfg)?;
            (
                v.holds,
                vec![
                    format!(
                        "entries lie in the contraction: {}",
                        verdict(v.entries_expressed)
                    ),
                    format!("determinant = 1: {}", verdict(v.det_is_one)),
                    format!("coalgebra map: {}", verdict(v.coalgebra_map)),
                ],
            )
        }
        "lie" => {
            let l = loaded
                .lie
                .as_ref()
                .ok_or_else(|| Error::Invalid("lie requires lie data".into()))?;
            let cl = contract_lie(l)?;
            cl.verify_jacobi()?;
            let fiber0 = cl.motion_fiber(&loaded.field.zero())?;
            let _ = fiber0;
            let mut detail = Vec::new();
            for i in 0..cl.dim() {
                for j in (i + 1)..cl.dim() {
                    let coords: Vec<String> = cl.brackets[i][j]
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(k, p)| format!("({p})*{}", cl.labels[k]))
                        .collect();
                    let rhs = if coords.is_empty() {
                        "0".into()
                    } else {
                        coords.join(" + ")
                    };
                    detail.push(format!("[{}, {}] = {}", cl.labels[i], cl.labels[j], rhs));
                }
            }
            detail.push("Jacobi identity holds identically in t".into());
            detail.push("p-part is an abelian ideal at t = 0".into());
            (true, detail)
        }
        "action" => {
            let l = loaded
                .lie
                .as_ref()
                .ok_or_else(|| Error::Invalid("action requires lie data".into()))?;
            let action = loaded
                .action
                .as_ref()
                .ok_or_else(|| Error::Invalid("action requires action data".into()))?;
            let ca = contract_derivation_action(l, &loaded.algebra, &loaded.theta, action, cfg)?;
            let cring = &ca.contraction.algebra.ring;
            let mut detail = Vec::new();
            for (i, row) in ca.images.iter().enumerate() {
                for (v, img) in row.iter().enumerate().skip(1) {
                    detail.push(format!("{}({}) = {}", ca.lie.labels[i], cring.vars[v], img));
                }
            }
            detail.push("Leibniz and bracket compatibility verified in t".into());
            (true, detail)
        }
        other => {
            return Err(Error::Invalid(format!("unknown property '{other}'")));
        }
    };
    Ok((
        ok,
        OpResult::Verify {
            property: prop.to_string(),
            verdict: verdict(ok),
            detail,
        },
    ))
}

pub fn run_verify(loaded: &Loaded, props: &[String], opts: &RunOpts) -> Result<Report> {
    let mut state = VerifyState {
        loaded,
        cfg: &opts.cfg,
        contraction: None,
        hopf_contraction: None,
    };
    let mut results = Vec::new();
    let mut all_ok = true;
    for prop in props {
        let (ok, r) = run_property(&mut state, prop, opts)?;
        all_ok &= ok;
        results.push(r);
    }
    Ok(Report {
        job: loaded.name.clone(),
        field: loaded.field.spec().to_string(),
        caps: opts.caps(),
        results,
        ok: all_ok,
    })
}
