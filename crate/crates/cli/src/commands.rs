use std::path::Path;

use homlie::cochain::{Carrier, Cochain};
use homlie::deformation::{
    extend_order, formal_deformation_check, infinitesimal_check, linear_deformation_check,
    nijenhuis_element_check, obstruction, trivial_deformation_from_nijenhuis, Extension,
};
use homlie::exactnum::{format_scalar, parse_scalar};
use homlie::graded::DerivedBracket;
use homlie::io::{
    format_matrix, format_vector, read_json, AlgebraDoc, CochainDoc, DeformationDoc, LinearOpDoc,
    RMatrixDoc, ReportDoc, RepresentationDoc,
};
use homlie::ooperator::{
    build_nt, graph_check, induced_hom_pre_lie, is_o_operator, is_rota_baxter,
    nijenhuis_operator_check, rho_t, subadjacent, OOperatorContext,
};
use homlie::rmatrix::{
    induced_dual_bracket, is_r_matrix, operator_to_tensor, tensor_to_operator,
    weak_homomorphism_check, Multivector,
};
use homlie::structures::{semidirect_product, verify_representation};
use homlie::{Error, Failure, HomLieAlgebra, Matrix, Representation, Scalar};
use serde_json::{json, Value};

use crate::args::{Command, RepDeformation, RepOperator};

fn load_algebra(path: &Path) -> Result<HomLieAlgebra, Error> {
    read_json::<AlgebraDoc>(path)?.to_algebra()
}

fn load_rep(path: &Path) -> Result<Representation, Error> {
    read_json::<RepresentationDoc>(path)?.to_representation(path.parent())
}

fn load_matrix(path: &Path) -> Result<Matrix, Error> {
    read_json::<LinearOpDoc>(path)?.to_matrix()
}

fn load_r(path: &Path, dim: usize) -> Result<Multivector, Error> {
    read_json::<RMatrixDoc>(path)?.to_multivector(dim)
}

fn load_deformation(path: &Path) -> Result<homlie::deformation::TruncatedDeformation, Error> {
    read_json::<DeformationDoc>(path)?.to_deformation()
}

fn operator_pair(args: &RepOperator) -> Result<(Representation, Matrix), Error> {
    Ok((load_rep(&args.rep)?, load_matrix(&args.t)?))
}

fn deformation_pair(
    args: &RepDeformation,
) -> Result<(Representation, homlie::deformation::TruncatedDeformation), Error> {
    Ok((load_rep(&args.rep)?, load_deformation(&args.deformation)?))
}

fn parse_point(text: &str) -> Result<Vec<Scalar>, Error> {
    text.split(',').map(|s| parse_scalar(s.trim())).collect()
}

fn cochain_doc(c: &Cochain) -> Value {
    serde_json::to_value(CochainDoc::from_cochain(c, Carrier::Module)).expect("serializable")
}

fn to_value<T: serde::Serialize>(doc: T) -> Value {
    serde_json::to_value(doc).expect("serializable")
}

/// Runs one command. Kernel errors that mean "the property required to
/// proceed does not hold" become failing reports; all other errors are
/// returned to the caller.
pub fn run(command: &Command) -> Result<ReportDoc, Error> {
    let verb = command.verb();
    match execute(command) {
        Err(Error::Precondition(msg)) => {
            Ok(ReportDoc::new(verb, false, &[], json!({ "error": msg })))
        }
        other => {
            other.map(|(verdict, failures, data)| ReportDoc::new(verb, verdict, &failures, data))
        }
    }
}

type Executed = (bool, Vec<Failure>, Value);

fn execute(command: &Command) -> Result<Executed, Error> {
    match command {
        Command::VerifyAlgebra { algebra } => {
            let g = load_algebra(algebra)?;
            let r = g.verify();
            let data = json!({
                "dim": g.dim(),
                "multiplicative": r.multiplicative,
                "hom_jacobi": r.hom_jacobi,
                "regular": r.regular,
            });
            Ok((r.is_hom_lie(), r.failures, data))
        }
        Command::VerifyRep { rep } => {
            let rep = load_rep(rep)?;
            let r = verify_representation(&rep);
            let data = json!({ "twist_compatible": r.twist_compatible, "module_equation": r.module_equation });
            Ok((r.is_representation(), r.failures, data))
        }
        Command::Semidirect { rep } => {
            let rep = load_rep(rep)?;
            let h = semidirect_product(&rep);
            let r = h.verify();
            let data = json!({ "algebra": to_value(AlgebraDoc::from_algebra(&h)) });
            Ok((r.is_hom_lie(), r.failures, data))
        }
        Command::Cohomology { rep, n, operator } => {
            let rep = load_rep(rep)?;
            let dims = match operator {
                Some(path) => OOperatorContext::new(&rep, &load_matrix(path)?)?.cohomology_dim(*n),
                None => homlie::cochain::Complex::new(rep).cohomology_dim(*n),
            };
            let data =
                json!({ "n": n, "dim_z": dims.dim_z, "dim_b": dims.dim_b, "dim_h": dims.dim_h });
            Ok((true, Vec::new(), data))
        }
        Command::CheckOOperator(args) => {
            let (rep, t) = operator_pair(args)?;
            let direct = is_o_operator(&rep, &t)?;
            let graph = graph_check(&rep, &t)?;
            let nij = nijenhuis_operator_check(&semidirect_product(&rep), &build_nt(&rep, &t)?)?;
            let mut data = json!({
                "intertwining": direct.intertwining,
                "o_identity": direct.o_identity,
                "graph_is_subalgebra": graph.is_subalgebra(),
                "nijenhuis": nij.holds,
            });
            if direct.intertwining {
                let tc = Cochain::from_matrix(&t);
                let square = DerivedBracket::new(&rep).bracket(&tc, &tc)?;
                data["square_zero"] = json!(square.is_zero());
            }
            Ok((direct.is_o_operator(), direct.failures, data))
        }
        Command::CheckRotaBaxter {
            algebra,
            r,
            s,
            lambda,
        } => {
            let g = load_algebra(algebra)?;
            let lambda = parse_scalar(lambda)?;
            let report = is_rota_baxter(&g, &load_matrix(r)?, *s, &lambda)?;
            let data = json!({
                "s": s,
                "lambda": format_scalar(&lambda),
                "commutes": report.commutes,
                "identity": report.identity,
            });
            Ok((report.is_rota_baxter(), report.failures, data))
        }
        Command::CheckNijenhuisOperator { algebra, operator } => {
            let report =
                nijenhuis_operator_check(&load_algebra(algebra)?, &load_matrix(operator)?)?;
            Ok((report.holds, report.failures, json!({})))
        }
        Command::InducedPreLie(args) => {
            let (rep, t) = operator_pair(args)?;
            let pre = induced_hom_pre_lie(&rep, &t)?;
            let m = pre.dim();
            let mut products = serde_json::Map::new();
            for i in 0..m {
                for j in 0..m {
                    let v = pre.product_basis(i, j);
                    if v.iter().any(|x| *x != Scalar::from_integer(0.into())) {
                        products.insert(format!("{i},{j}"), json!(format_vector(v)));
                    }
                }
            }
            let r = pre.verify();
            let data = json!({
                "twist": format_matrix(pre.twist()),
                "products": products,
                "subadjacent": to_value(AlgebraDoc::from_algebra(&subadjacent(&pre))),
            });
            Ok((r.is_hom_pre_lie(), r.failures, data))
        }
        Command::RhoT(args) => {
            let (rep, t) = operator_pair(args)?;
            let induced = rho_t(&rep, &t)?;
            let r = induced.verify();
            let data = json!({ "representation": to_value(RepresentationDoc::from_representation(&induced)) });
            Ok((r.is_representation(), r.failures, data))
        }
        Command::CheckLinearDeformation { base, generator } => {
            let (rep, t) = operator_pair(base)?;
            let r = linear_deformation_check(&rep, &t, &load_matrix(generator)?)?;
            let data = json!({
                "commuting": r.commuting,
                "cocycle": r.cocycle,
                "generator_is_o_operator": r.generator_is_o_operator,
            });
            Ok((r.valid(), r.failures, data))
        }
        Command::NijenhuisElement { base, x } => {
            let (rep, t) = operator_pair(base)?;
            let x = parse_point(x)?;
            let r = nijenhuis_element_check(&rep, &t, &x)?;
            let mut data = json!({
                "fixed": r.fixed,
                "brackets_commute": r.brackets_commute,
                "action_vanishes": r.action_vanishes,
                "operator_condition": r.operator_condition,
            });
            let mut verdict = r.is_nijenhuis();
            if verdict {
                let cert = trivial_deformation_from_nijenhuis(&rep, &t, &x)?;
                verdict = cert.certified();
                data["generator"] = to_value(LinearOpDoc::from_matrix(&cert.generator));
                data["certified"] = json!(cert.certified());
            }
            Ok((verdict, r.failures, data))
        }
        Command::DeformCheck(args) => {
            let (rep, d) = deformation_pair(args)?;
            let r = formal_deformation_check(&rep, &d)?;
            let orders: Vec<Value> = r
                .orders
                .iter()
                .map(|o| json!({ "k": o.k, "holds": o.holds, "bracket_sum_zero": o.bracket_sum_zero }))
                .collect();
            let mut data = json!({ "compatible": r.compatible, "orders": orders });
            if r.valid() && d.terms.iter().any(|t| !t.is_zero()) {
                let inf = infinitesimal_check(&rep, &d)?;
                data["infinitesimal"] = json!({ "index": inf.index, "is_cocycle": inf.is_cocycle });
            }
            Ok((r.valid(), r.failures, data))
        }
        Command::DeformExtend { input, max_order } => {
            let (rep, mut d) = deformation_pair(input)?;
            let start = formal_deformation_check(&rep, &d)?;
            if !start.valid() {
                let data = json!({ "error": "input is not a deformation to its stated order" });
                return Ok((false, start.failures, data));
            }
            let mut found = Vec::new();
            let mut data = json!({});
            while d.order() < *max_order {
                match extend_order(&rep, &d)? {
                    Extension::Extended { term, deformation } => {
                        found.push(json!({ "k": deformation.order(), "term": to_value(LinearOpDoc::from_matrix(&term)) }));
                        d = deformation;
                    }
                    Extension::Obstructed {
                        obstruction,
                        rank,
                        augmented_rank,
                    } => {
                        data["obstruction"] = json!({
                            "order": d.order() + 1,
                            "cochain": cochain_doc(&obstruction),
                            "rank": rank,
                            "augmented_rank": augmented_rank,
                        });
                        break;
                    }
                }
            }
            let reached = d.order() >= *max_order;
            data["reached_order"] = json!(d.order());
            data["terms"] = json!(found);
            data["deformation"] = to_value(DeformationDoc::from_deformation(&d));
            Ok((reached, Vec::new(), data))
        }
        Command::Obstruction(args) => {
            let (rep, d) = deformation_pair(args)?;
            let theta = obstruction(&rep, &d)?;
            let ctx = OOperatorContext::new(&rep, &d.base)?;
            let closed = ctx.coboundary(&theta)?.is_zero();
            let extends = matches!(extend_order(&rep, &d)?, Extension::Extended { .. });
            let data = json!({
                "order": d.order() + 1,
                "cochain": cochain_doc(&theta),
                "is_cocycle": closed,
                "extends": extends,
            });
            Ok((true, Vec::new(), data))
        }
        Command::RmatrixCheck { algebra, r } => {
            let g = load_algebra(algebra)?;
            let r = load_r(r, g.dim())?;
            let report = is_r_matrix(&g, &r)?;
            let mut data = json!({
                "wedge_bracket_zero": report.wedge_bracket_zero,
                "cybe_zero": report.cybe_zero,
                "o_operator": report.o_operator,
                "routes_agree": report.routes_agree(),
            });
            if report.is_r_matrix() {
                data["dual_algebra"] =
                    to_value(AlgebraDoc::from_algebra(&induced_dual_bracket(&g, &r)?));
            }
            Ok((report.is_r_matrix(), report.failures, data))
        }
        Command::RmatrixConvert { r, dim, operator } => {
            let data = match (r, operator) {
                (Some(path), _) => {
                    let dim =
                        dim.ok_or_else(|| Error::Invalid("--dim is required with --r".into()))?;
                    json!({ "operator": to_value(LinearOpDoc::from_matrix(&tensor_to_operator(&load_r(path, dim)?)?)) })
                }
                (None, Some(path)) => {
                    json!({ "r": to_value(RMatrixDoc::from_multivector(&operator_to_tensor(&load_matrix(path)?)?)) })
                }
                (None, None) => {
                    return Err(Error::Invalid(
                        "one of --r or --operator is required".into(),
                    ))
                }
            };
            Ok((true, Vec::new(), data))
        }
        Command::WeakHomCheck {
            algebra,
            phi,
            psi,
            r1,
            r2,
        } => {
            let g = load_algebra(algebra)?;
            let n = g.dim();
            let report = weak_homomorphism_check(
                &g,
                &load_matrix(phi)?,
                &load_matrix(psi)?,
                &load_r(r1, n)?,
                &load_r(r2, n)?,
            )?;
            let data = json!({
                "algebra_morphism": report.algebra_morphism,
                "commutes": report.commutes,
                "tensor_condition": report.tensor_condition,
                "bracket_condition": report.bracket_condition,
                "operator_route": report.operator_route.is_homomorphism(),
                "routes_agree": report.routes_agree(),
            });
            Ok((report.is_weak_homomorphism(), report.failures, data))
        }
    }
}
