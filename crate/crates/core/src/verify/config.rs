use crate::elliptic::FluxLaw;
use crate::error::ConfigError;
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Campaign configuration as a flat JSON object.
///
/// ```json
/// { "n": 2, "law": "p-laplace", "p": 3.0, "C": 0.1,
///   "grid.nr": 64, "grid.ntheta": 64, "tol.compare": 1e-8, "seed": 42 }
/// ```
///
/// Every key is optional. `radii` overrides the per-campaign radius list.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    pub campaign: Option<String>,
    pub n: usize,
    /// `linear`, `p-laplace` or `mse`; used by `radial`, `solve2d` and `translate-check`.
    pub law: String,
    pub p: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub radii: Option<Vec<f64>>,
    /// Radial cells of the coarse grid; the fine grid doubles it.
    #[serde(rename = "grid.nr")]
    pub grid_nr: usize,
    #[serde(rename = "grid.ntheta")]
    pub grid_ntheta: usize,
    /// Relative tolerance of the ball maximum of `‖Ad‖`.
    #[serde(rename = "tol.adjoint")]
    pub tol_adjoint: f64,
    /// Euclidean distance of the sampled maximiser from `(0, e^R)`.
    #[serde(rename = "tol.argmax")]
    pub tol_argmax: f64,
    #[serde(rename = "tol.harmonic")]
    pub tol_harmonic: f64,
    #[serde(rename = "tol.gradient")]
    pub tol_gradient: f64,
    #[serde(rename = "tol.indicator")]
    pub tol_indicator: f64,
    #[serde(rename = "tol.flux")]
    pub tol_flux: f64,
    #[serde(rename = "tol.solver")]
    pub tol_solver: f64,
    /// Half-width of the accepted convergence-order window around 2.
    #[serde(rename = "tol.order")]
    pub tol_order: f64,
    #[serde(rename = "tol.compare")]
    pub tol_compare: f64,
    #[serde(rename = "tol.translate")]
    pub tol_translate: f64,
    /// Relative plateau width for the decay classifier rows.
    #[serde(rename = "tol.decay")]
    pub tol_decay: f64,
    /// Angular samples per sphere (adjoint and decay campaigns).
    pub samples: usize,
    /// Random instances per law in `compare`, translations in `translate-check`.
    pub instances: usize,
    pub seed: u64,
    pub outdir: Option<PathBuf>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            campaign: None,
            n: 2,
            law: "p-laplace".into(),
            p: 3.0,
            c: 1.0,
            radii: None,
            grid_nr: 64,
            grid_ntheta: 64,
            tol_adjoint: 1e-6,
            tol_argmax: 1e-2,
            tol_harmonic: 1e-9,
            tol_gradient: 1e-12,
            tol_indicator: 1e-4,
            tol_flux: 1e-10,
            tol_solver: 1e-10,
            tol_order: 0.1,
            tol_compare: 1e-8,
            tol_translate: 1e-5,
            tol_decay: 0.05,
            samples: 10_000,
            instances: 20,
            seed: 42,
            outdir: None,
        }
    }
}

impl CampaignConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let tols = [
            ("tol.adjoint", self.tol_adjoint),
            ("tol.argmax", self.tol_argmax),
            ("tol.harmonic", self.tol_harmonic),
            ("tol.gradient", self.tol_gradient),
            ("tol.indicator", self.tol_indicator),
            ("tol.flux", self.tol_flux),
            ("tol.solver", self.tol_solver),
            ("tol.order", self.tol_order),
            ("tol.compare", self.tol_compare),
            ("tol.translate", self.tol_translate),
            ("tol.decay", self.tol_decay),
        ];
        for (key, v) in tols {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::Invalid(format!("{key} must be positive, got {v}")));
            }
        }
        if self.n < 2 {
            return Err(ConfigError::Invalid(format!("n must be at least 2, got {}", self.n)));
        }
        if !(self.c.is_finite()) {
            return Err(ConfigError::Invalid("C must be finite".into()));
        }
        if let Some(radii) = &self.radii {
            if radii.is_empty() || radii.iter().any(|r| !(*r >= 0.0 && r.is_finite())) {
                return Err(ConfigError::Invalid("radii must be non-empty, finite and non-negative".into()));
            }
            if radii.windows(2).any(|w| w[0] >= w[1]) {
                return Err(ConfigError::Invalid("radii must be strictly ascending".into()));
            }
        }
        if self.grid_nr < 8 || self.grid_ntheta < 8 {
            return Err(ConfigError::Invalid("grid.nr and grid.ntheta must be at least 8".into()));
        }
        if self.samples < 4 || self.instances == 0 {
            return Err(ConfigError::Invalid("samples must be at least 4 and instances positive".into()));
        }
        self.flux_law()?;
        Ok(())
    }

    pub fn flux_law(&self) -> Result<FluxLaw, ConfigError> {
        match self.law.as_str() {
            "linear" => Ok(FluxLaw::Linear),
            "p-laplace" | "p_laplace" if self.p > 1.0 => Ok(FluxLaw::PLaplace { p: self.p }),
            "p-laplace" | "p_laplace" => Err(ConfigError::Invalid(format!("p must exceed 1, got {}", self.p))),
            "mse" | "minimal_surface" => Ok(FluxLaw::MinimalSurface),
            other => Err(ConfigError::Invalid(format!("unknown law {other:?}"))),
        }
    }

    /// The configured radii, or `default` when none were given.
    pub fn radii_or(&self, default: &[f64]) -> Vec<f64> {
        self.radii.clone().unwrap_or_else(|| default.to_vec())
    }
}
