//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error, 4 conservation
//! violation (`annihilate` only).

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::annihilation::{
    self, build_pair, exchange_energy, moment_expectation, spin_expectation, NamedState,
    RelativeSign, Stage,
};
use crate::constants::{joules_per_kev, PhysicalConstants};
use crate::error::Error;
use crate::output::{csv, sci, OutputEnvelope};
use crate::photon::{Helicity, Photon};
use crate::spin_hilbert::TwoSpinState;
use crate::stern_gerlach::{simulate_beam, sweep_omega, SgeConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_NOT_CONSERVED: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "gammaspin", version, about = "Spin and magnetic-moment calculations for annihilation gamma photons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the physical constants in SI units.
    Constants,
    /// Spin and magnetic-moment expectation values of a named two-spin state.
    Expectations(ExpectationsArgs),
    /// Audit spin and moment conservation across the annihilation.
    Annihilate(AnnihilateArgs),
    /// Intrinsic properties of a single photon.
    Photon(PhotonArgs),
    /// Stern-Gerlach deflection of a photon beam, or a frequency sweep.
    Sge(SgeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum StateName {
    PhiA,
    PhiB,
    PhiAPrime,
    PhiBPrime,
    PsiI,
    PsiF,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    Plus,
    Minus,
}

impl From<Sign> for RelativeSign {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => RelativeSign::Plus,
            Sign::Minus => RelativeSign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HelicityArg {
    Rh,
    Lh,
}

impl From<HelicityArg> for Helicity {
    fn from(h: HelicityArg) -> Self {
        match h {
            HelicityArg::Rh => Helicity::Right,
            HelicityArg::Lh => Helicity::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ExpectationsArgs {
    #[arg(long, value_enum)]
    pub state: StateName,
    /// Relative sign of the entangled states psi_i / psi_f.
    #[arg(long, value_enum, default_value = "plus")]
    pub sign: Sign,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be positive, got {s}"))
    }
}

#[derive(Debug, Args)]
pub struct AnnihilateArgs {
    #[arg(long, value_enum, default_value = "plus")]
    pub sign_initial: Sign,
    #[arg(long, value_enum, default_value = "plus")]
    pub sign_final: Sign,
    #[arg(long, default_value = "1e-12", value_parser = positive_f64)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
#[group(id = "frequency", required = true, multiple = false)]
pub struct FrequencyArgs {
    /// Angular frequency (rad/s).
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Photon energy (keV).
    #[arg(long, allow_negative_numbers = true)]
    pub energy_kev: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PhotonArgs {
    #[command(flatten)]
    pub frequency: FrequencyArgs,
    #[arg(long, value_enum)]
    pub helicity: HelicityArg,
}

#[derive(Debug, Args)]
pub struct SgeArgs {
    /// Field gradient dBz/dz (T/m).
    #[arg(long, allow_negative_numbers = true)]
    pub gradient: f64,
    /// Magnet length (m).
    #[arg(long, allow_negative_numbers = true)]
    pub length: f64,
    /// Drift length from magnet exit to detector (m).
    #[arg(long, default_value = "0", allow_negative_numbers = true)]
    pub drift: f64,
    /// Angular frequency (rad/s) for single-shot mode.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["energy_kev", "sweep_min"])]
    pub omega: Option<f64>,
    /// Photon energy (keV) for single-shot mode.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "sweep_min")]
    pub energy_kev: Option<f64>,
    /// Helicities in the beam, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "rh,lh")]
    pub beam: Vec<HelicityArg>,
    /// Lower end of a frequency sweep (rad/s).
    #[arg(long, requires = "sweep_max", allow_negative_numbers = true)]
    pub sweep_min: Option<f64>,
    /// Upper end of a frequency sweep (rad/s).
    #[arg(long, requires = "sweep_min", allow_negative_numbers = true)]
    pub sweep_max: Option<f64>,
    /// Number of logarithmically spaced sweep points.
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "domain error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

/// Rendered output plus the exit code it should be reported with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit_code: EXIT_OK }
    }
}

pub fn run(cli: &Cli, k: &PhysicalConstants) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Constants => Ok(Outcome::ok(cmd_constants(k).to_json())),
        Command::Expectations(a) => Ok(Outcome::ok(cmd_expectations(a.state, a.sign.into(), k)?.to_json())),
        Command::Annihilate(a) => {
            let env = cmd_annihilate(a.sign_initial.into(), a.sign_final.into(), a.tolerance, k)?;
            let conserved = env.flag("spin_conserved") == Some(true)
                && env.flag("moment_conserved") == Some(true);
            Ok(Outcome {
                stdout: env.to_json(),
                exit_code: if conserved { EXIT_OK } else { EXIT_NOT_CONSERVED },
            })
        }
        Command::Photon(a) => {
            let env = cmd_photon(a.frequency.omega, a.frequency.energy_kev, a.helicity.into(), k)?;
            Ok(Outcome::ok(env.to_json()))
        }
        Command::Sge(a) => cmd_sge(a, k).map(Outcome::ok),
    }
}

pub fn cmd_constants(k: &PhysicalConstants) -> OutputEnvelope {
    OutputEnvelope::new("constants")
        .input("source", "CODATA 2018")
        .result("e_C", k.e)
        .result("h_J_s", k.h)
        .result("hbar_J_s", k.hbar)
        .result("m0_kg", k.m0)
        .result("c_m_per_s", k.c)
        .result("mu_B_J_per_T", k.mu_bohr())
        .result("Phi_0_T_m2", k.flux_quantum())
        .result("rest_energy_J", k.rest_energy())
        .relation("mu_B = e*hbar/(2*m0)")
        .relation("Phi_0 = h/e")
        .relation("hbar = h/(2*pi)")
}

fn resolve_state(name: StateName, sign: RelativeSign) -> (TwoSpinState, &'static str) {
    match name {
        StateName::PhiA => (NamedState::PhiA.state(), "phi_a"),
        StateName::PhiB => (NamedState::PhiB.state(), "phi_b"),
        StateName::PhiAPrime => (NamedState::PhiAPrime.state(), "phi_a_prime"),
        StateName::PhiBPrime => (NamedState::PhiBPrime.state(), "phi_b_prime"),
        StateName::PsiI => (build_pair(Stage::Initial, sign).state, "psi_i"),
        StateName::PsiF => (build_pair(Stage::Final, sign).state, "psi_f"),
    }
}

pub fn cmd_expectations(
    name: StateName,
    sign: RelativeSign,
    k: &PhysicalConstants,
) -> Result<OutputEnvelope, CliError> {
    let (state, label) = resolve_state(name, sign);
    let sz = spin_expectation(&state)?;
    let mu = moment_expectation(&state, k)?;
    // <S1.S2> = -U/(2J); evaluate at J = -1/2 to read it off directly.
    let s1s2 = exchange_energy(-0.5, &state)?;
    let mut env = OutputEnvelope::new("expectations").input("state", label);
    if matches!(name, StateName::PsiI | StateName::PsiF) {
        env = env.input("sign", sign.as_str());
    }
    Ok(env
        .result("sz_hbar", sz)
        .result("mu_z_J_per_T", mu)
        .result("mu_over_mu_B", mu / k.mu_bohr())
        .result("s1_dot_s2_hbar2", s1s2)
        .relation("S_z_total = (S1)_z + (S2)_z")
        .relation("mu_z_total = -g*mu_B*(S1)_z + g*mu_B*(S2)_z, g = 2")
        .relation("<A> = <psi|A|psi>"))
}

pub fn cmd_annihilate(
    sign_initial: RelativeSign,
    sign_final: RelativeSign,
    tolerance: f64,
    k: &PhysicalConstants,
) -> Result<OutputEnvelope, CliError> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {tolerance}")));
    }
    let r = annihilation::annihilate(sign_initial, sign_final, k, tolerance)?;
    Ok(OutputEnvelope::new("annihilate")
        .input("sign_initial", sign_initial.as_str())
        .input("sign_final", sign_final.as_str())
        .input("tolerance", tolerance)
        .result("sz_initial_hbar", r.sz_initial)
        .result("sz_final_hbar", r.sz_final)
        .result("mu_initial_J_per_T", r.mu_initial)
        .result("mu_final_J_per_T", r.mu_final)
        .result("spin_conserved", r.spin_conserved)
        .result("moment_conserved", r.moment_conserved)
        .relation("psi_i = (|dd> +/- |uu>)/sqrt(2) -> psi_f = (|du> +/- |ud>)/sqrt(2)")
        .relation("|<S_z>_i - <S_z>_f| <= tolerance")
        .relation("|<mu_z>_i - <mu_z>_f| <= tolerance*2*mu_B"))
}

fn photon_from(
    omega: Option<f64>,
    energy_kev: Option<f64>,
    helicity: Helicity,
    k: &PhysicalConstants,
) -> Result<(Photon, &'static str, f64), CliError> {
    match (omega, energy_kev) {
        (Some(w), None) => Ok((Photon::new(w, helicity)?, "omega_rad_per_s", w)),
        (None, Some(kev)) => Ok((
            Photon::from_energy(kev * joules_per_kev(k), helicity, k)?,
            "energy_keV",
            kev,
        )),
        _ => Err(CliError::Usage("give exactly one of --omega or --energy-kev".into())),
    }
}

pub fn cmd_photon(
    omega: Option<f64>,
    energy_kev: Option<f64>,
    helicity: Helicity,
    k: &PhysicalConstants,
) -> Result<OutputEnvelope, CliError> {
    let (p, key, given) = photon_from(omega, energy_kev, helicity, k)?;
    let mu = p.magnetic_moment(k);
    let flux = p.quantum_flux(k);
    Ok(OutputEnvelope::new("photon")
        .input(key, given)
        .input("helicity", helicity.as_str())
        .result("omega_rad_per_s", p.omega())
        .result("energy_J", p.energy(k))
        .result("energy_keV", p.energy(k) / joules_per_kev(k))
        .result("wavelength_m", p.wavelength(k))
        .result("mu_z_J_per_T", mu)
        .result("mu_over_mu_B", mu / k.mu_bohr())
        .result("flux_T_m2", flux)
        .result("flux_over_Phi_0", flux / k.flux_quantum())
        .result("spin_z_hbar", p.spin_z())
        .relation("mu_z = +/- e*c^2/omega (rh: +, lh: -)")
        .relation("flux = +/- Phi_0, Phi_0 = h/e")
        .relation("S_z = 0"))
}

fn sge_config(a: &SgeArgs) -> Result<SgeConfig, CliError> {
    SgeConfig::new(a.gradient, a.length, a.drift).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cmd_sge(a: &SgeArgs, k: &PhysicalConstants) -> Result<String, CliError> {
    let cfg = sge_config(a)?;
    let helicities: Vec<Helicity> = a.beam.iter().map(|&h| h.into()).collect();
    if helicities.is_empty() {
        return Err(CliError::Usage("beam must contain at least one photon".into()));
    }
    if let (Some(lo), Some(hi)) = (a.sweep_min, a.sweep_max) {
        if a.output == Some(OutputFormat::Json) {
            return Err(CliError::Usage("sweep output is CSV only".into()));
        }
        let paired = helicities.contains(&Helicity::Right) && helicities.contains(&Helicity::Left);
        let rows = sweep_omega(lo, hi, a.steps, paired, &cfg, k)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(csv(
            &["omega_rad_per_s", "separation_m"],
            rows.iter().map(|r| vec![sci(r.omega), sci(r.separation)]),
        ));
    }
    let omega = match (a.omega, a.energy_kev) {
        (Some(w), None) => w,
        (None, Some(kev)) => k.omega_from_energy(kev * joules_per_kev(k))?,
        (None, None) => k.rest_energy() / k.hbar,
        (Some(_), Some(_)) => unreachable!("clap rejects --omega with --energy-kev"),
    };
    let photons = helicities
        .iter()
        .map(|&h| Photon::new(omega, h))
        .collect::<Result<Vec<_>, _>>()?;
    let beam = simulate_beam(&photons, &cfg, k)?;

    if a.output == Some(OutputFormat::Csv) {
        return Ok(csv(
            &["helicity", "omega_rad_per_s", "force_N", "transverse_kick_kg_m_per_s", "displacement_m"],
            beam.deflections.iter().map(|d| {
                vec![
                    d.photon.helicity().as_str().to_owned(),
                    sci(d.photon.omega()),
                    sci(d.force),
                    sci(d.transverse_kick),
                    sci(d.displacement),
                ]
            }),
        ));
    }

    let mut env = OutputEnvelope::new("sge")
        .input("gradient_T_per_m", cfg.gradient())
        .input("magnet_length_m", cfg.magnet_length())
        .input("drift_length_m", cfg.drift_length())
        .input("omega_rad_per_s", omega)
        .input("beam", helicities.iter().map(|h| h.as_str()).collect::<Vec<_>>().join(","))
        .result("separation_m", beam.separation);
    for h in Helicity::BOTH {
        if let Some(d) = beam.deflections.iter().find(|d| d.photon.helicity() == h) {
            env = env
                .result(&format!("force_{h}_N"), d.force)
                .result(&format!("transverse_kick_{h}_kg_m_per_s"), d.transverse_kick)
                .result(&format!("displacement_{h}_m"), d.displacement);
        }
    }
    Ok(env
        .relation("F = mu_z*dBz/dz, mu_z = +/- e*c^2/omega")
        .relation("m_eff = hbar*omega/c^2 (model assumption)")
        .relation("y = (e*c^2*G/(hbar*omega^2))*(L^2/2 + L*D)")
        .to_json())
}
