use std::fs;
use std::io::BufWriter;
use std::path::Path;

use photon::schrodinger::io::{read_state, write_csv, write_state};
use photon::schrodinger::{
    contaminate, evolve_observed, gaussian_packet, maxwell_residual, observables, shell_state, EvolutionConfig,
    MomentumGrid, Representation, SpinorField, TRANSVERSE_LIMIT,
};
use photon::spin::{helicity_basis, Branch};
use photon::tensor::{
    boost, discrete_symmetry, dual, invariants, make_photon_tensor, transversality_residual, LorentzBoost,
    TensorDocument, CONSTRUCTION_TOLERANCE, TRANSFORM_TOLERANCE,
};
use photon::toy::{ModelFamily, QUADRATURE_REL_TOL};
use photon::{Helicity, Vec3};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::args::{Cli, Command, GridArgs, Model, StateCommand, TensorCommand, TensorInput};
use crate::report::Recorder;
use crate::CliError;

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let mut rec = match &cli.command {
        Command::Tensor(cmd) => tensor(cmd)?,
        Command::Helicity { k } => helicity(k)?,
        Command::Evolve { config, state, out, final_state } => evolve(config, state, out, final_state.as_deref())?,
        Command::Toymodel { model, omega0, k } => toymodel(*model, *omega0, *k)?,
        Command::MaxwellDemo { config } => maxwell_demo(config)?,
        Command::State(cmd) => state(cmd)?,
    };
    rec.finish(cli.reproducible)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    fs::write(path, text).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn read_tensor(input: &TensorInput) -> Result<TensorDocument, CliError> {
    read_json(&input.input)
}

fn emit_tensor(rec: &mut Recorder, doc: &TensorDocument, out: Option<&Path>) -> Result<(), CliError> {
    rec.outputs_from(doc)?;
    if let Some(path) = out {
        write_json(path, doc)?;
        rec.output("written", &path)?;
    }
    Ok(())
}

fn tensor(cmd: &TensorCommand) -> Result<Recorder, CliError> {
    let mut rec;
    match cmd {
        TensorCommand::Make { k, helicity, omega, phase, out } => {
            rec = Recorder::new("tensor make");
            rec.input("k", k)?.input("helicity", helicity)?.input("omega", omega)?.input("phase", phase)?;
            let photon = make_photon_tensor(k, *helicity, *omega, *phase)?;
            emit_tensor(&mut rec, &photon.to_document(), out.as_deref())?;
            rec.tolerance("construction", CONSTRUCTION_TOLERANCE);
        }
        TensorCommand::Boost { beta, input, out } => {
            rec = Recorder::new("tensor boost");
            let lorentz = LorentzBoost::new(*beta)?;
            let doc = read_tensor(input)?;
            rec.input("beta", beta)?.input("tensor", &doc)?;
            let result = match (doc.k, doc.helicity) {
                (Some(_), Some(_)) => doc.photon()?.boosted(&lorentz)?.to_document(),
                (Some(k), None) => {
                    let (f, k) = boost(&doc.tensor(), &k, &lorentz)?;
                    TensorDocument { k: Some(k), ..TensorDocument::from_tensor(&f) }
                }
                _ => {
                    let (f, _) = boost(&doc.tensor(), &Vec3::x(), &lorentz)?;
                    TensorDocument::from_tensor(&f)
                }
            };
            rec.output("gamma", &lorentz.gamma())?;
            emit_tensor(&mut rec, &result, out.as_deref())?;
            rec.tolerance("transform", TRANSFORM_TOLERANCE);
        }
        TensorCommand::Dual { input, out } => {
            rec = Recorder::new("tensor dual");
            let doc = read_tensor(input)?;
            rec.input("tensor", &doc)?;
            emit_tensor(&mut rec, &TensorDocument::from_tensor(&dual(&doc.tensor())), out.as_deref())?;
        }
        TensorCommand::Invariants { input } => {
            rec = Recorder::new("tensor invariants");
            let doc = read_tensor(input)?;
            rec.input("tensor", &doc)?;
            rec.outputs_from(&invariants(&doc.tensor()))?;
        }
        TensorCommand::Symmetry { op, input, out } => {
            rec = Recorder::new("tensor symmetry");
            let doc = read_tensor(input)?;
            rec.input("op", &op.to_string())?.input("tensor", &doc)?;
            emit_tensor(&mut rec, &TensorDocument::from_tensor(&discrete_symmetry(&doc.tensor(), *op)), out.as_deref())?;
        }
        TensorCommand::Transversality { k, input } => {
            rec = Recorder::new("tensor transversality");
            let doc = read_tensor(input)?;
            let k = k.or(doc.k).ok_or_else(|| {
                CliError::Validation("no propagation direction: pass --k or include \"k\" in the document".into())
            })?;
            rec.input("k", &k)?.input("tensor", &doc)?;
            let (first, second) = transversality_residual(&doc.tensor(), &k)?;
            rec.output("residual", &[first, second])?;
            rec.output("transverse", &(first.max(second) <= TRANSFORM_TOLERANCE * doc.e.norm().max(1.0)))?;
            rec.tolerance("transform", TRANSFORM_TOLERANCE);
        }
    }
    Ok(rec)
}

fn helicity(k: &Vec3) -> Result<Recorder, CliError> {
    let mut rec = Recorder::new("helicity");
    rec.input("k", k)?;
    let basis = helicity_basis(k)?;
    rec.outputs_from(&basis)?;
    let branch = match basis.branch {
        Branch::ClosedForm => "closed_form",
        Branch::Fallback => "fallback",
    };
    rec.output("branch", &branch)?;
    rec.tolerance("unit_direction", photon::UNIT_TOLERANCE);
    rec.tolerance("singular_threshold", photon::spin::SINGULAR_THRESHOLD);
    Ok(rec)
}

fn evolve(config: &Path, state: &Path, out: &Path, final_state: Option<&Path>) -> Result<Recorder, CliError> {
    let mut rec = Recorder::new("evolve");
    let cfg: EvolutionConfig = read_json(config)?;
    cfg.validate()?;
    let initial = read_state(state)?;
    rec.input("config", &cfg)?.input("state", &state)?;
    rec.input("grid", initial.grid())?.input("representation", &initial.representation())?;
    let momentum = match initial.representation() {
        Representation::Momentum => initial.clone(),
        Representation::Position => initial.to_momentum()?,
    };
    let (evolved, rows) = evolve_observed(&momentum, &cfg)?;
    let file = fs::File::create(out).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", out.display())))?;
    write_csv(BufWriter::new(file), &rows).map_err(|e| CliError::Internal(e.to_string()))?;
    rec.output("csv", &out)?.output("rows", &rows.len())?;
    rec.output("initial", &rows[0])?.output("final", &rows[rows.len() - 1])?;
    if let Some(path) = final_state {
        let result = match initial.representation() {
            Representation::Momentum => evolved,
            Representation::Position => evolved.to_position()?,
        };
        write_state(path, &result).map_err(|e| CliError::Internal(e.to_string()))?;
        rec.output("final_state", &path)?;
    }
    Ok(rec)
}

fn toymodel(model: Model, omega0: f64, k: Option<f64>) -> Result<Recorder, CliError> {
    let mut rec = Recorder::new("toymodel");
    let family = match (model, k) {
        (Model::Disk, None) => ModelFamily::Disk,
        (Model::String, None) => ModelFamily::String,
        (Model::Ring, Some(k)) => ModelFamily::Ring { k },
        (Model::Ring, None) => return Err(CliError::Validation("the ring model needs --k".into())),
        (_, Some(_)) => return Err(CliError::Validation("--k applies only to the ring model".into())),
    };
    rec.input("family", &family)?.input("omega0", &omega0)?;
    let report = family.build(omega0)?.report()?;
    rec.outputs_from(&report)?;
    rec.tolerance("quadrature_rel_tol", QUADRATURE_REL_TOL);
    Ok(rec)
}

/// Configuration of `maxwell-demo`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MaxwellConfig {
    n: usize,
    p_max: f64,
    p0: Vec3,
    sigma: f64,
    helicity: Helicity,
    dt: f64,
    /// Longitudinal admixtures to sweep.
    #[serde(default)]
    contamination: Vec<f64>,
}

const MAXWELL_NOTE: &str = "Real and imaginary parts of the photon wave function obey equations of \
Maxwell form. This reflects the shape of the equations only: the state is a probability amplitude \
in spin space, not an electromagnetic field, and this is not a derivation of Maxwell's equations.";

fn maxwell_demo(config: &Path) -> Result<Recorder, CliError> {
    let mut rec = Recorder::new("maxwell-demo");
    let cfg: MaxwellConfig = read_json(config)?;
    rec.input("config", &cfg)?;
    let grid = MomentumGrid::new(cfg.n, cfg.p_max)?;
    let packet = gaussian_packet(&grid, &cfg.p0, cfg.sigma, cfg.helicity)?;
    let position = packet.to_position()?;
    let full = maxwell_residual(&position, cfg.dt)?;
    let half = maxwell_residual(&position, cfg.dt / 2.0)?;
    rec.output("residuals", &full)?.output("residuals_half_dt", &half)?;
    rec.output(
        "curl_ratio",
        &[full.curl_e_residual / half.curl_e_residual, full.curl_b_residual / half.curl_b_residual],
    )?;
    let mut sweep = Vec::new();
    for &amount in &cfg.contamination {
        let dirty = contaminate(&packet, amount)?.to_position()?;
        match maxwell_residual(&dirty, cfg.dt) {
            Ok(r) => sweep.push(json!({
                "amount": amount,
                "defect": r.transversality_defect,
                "div_e": r.div_e,
                "div_b": r.div_b,
            })),
            Err(e) => sweep.push(json!({ "amount": amount, "rejected": e.to_string() })),
        }
    }
    rec.output("contamination", &sweep)?;
    rec.output("note", &MAXWELL_NOTE)?;
    rec.tolerance("transverse_limit", TRANSVERSE_LIMIT);
    Ok(rec)
}

fn save_state(rec: &mut Recorder, state: &SpinorField, out: &Path) -> Result<(), CliError> {
    write_state(out, state).map_err(|e| CliError::Internal(e.to_string()))?;
    rec.output("written", &out)?.outputs_from(&observables(state)?)?;
    Ok(())
}

fn state(cmd: &StateCommand) -> Result<Recorder, CliError> {
    let make_grid = |g: &GridArgs| MomentumGrid::new(g.n, g.p_max);
    let mut rec;
    match cmd {
        StateCommand::Gaussian { grid, p0, sigma, helicity, out } => {
            rec = Recorder::new("state gaussian");
            let g = make_grid(grid)?;
            rec.input("grid", &g)?.input("p0", p0)?.input("sigma", sigma)?.input("helicity", helicity)?;
            save_state(&mut rec, &gaussian_packet(&g, p0, *sigma, *helicity)?, out)?;
        }
        StateCommand::Shell { grid, energy, width, helicity, out } => {
            rec = Recorder::new("state shell");
            let g = make_grid(grid)?;
            rec.input("grid", &g)?.input("energy", energy)?.input("width", width)?.input("helicity", helicity)?;
            save_state(&mut rec, &shell_state(&g, *energy, *helicity, *width)?, out)?;
        }
    }
    Ok(rec)
}
