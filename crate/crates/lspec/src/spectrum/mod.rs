//! Approximation constants, spectra and their certificates.

pub mod certificate;
pub mod engine;
pub mod families;
pub mod hall;
pub mod sample;
pub mod stream;
pub mod value;

pub use certificate::{Argument, CertKind, Certificate, EngineBReport, SearchBudget};
pub use engine::{c_alpha_axes, c_alpha_quadratic, engine_a, engine_b, n_alpha_beta, EngineAOutcome, EngineAResult};
pub use families::{contains_all_blocks, family_e, family_f, golden_witnesses, m2_witness, preset};
pub use hall::{hall_constants, hall_constants_of_axis, hall_witness, HallConstants, HallWitness};
pub use sample::{
    hurwitz_estimate, hurwitz_estimate_axis, spectrum_sample, spectrum_sample_targets, HurwitzEstimate, SamplePoint, SpectrumSample, Target,
    TargetGenerator,
};
pub use stream::{c_alpha_stream, c_alpha_stream_coeffs, scan_ray, RayScan, RaySegment, StreamEstimate};
pub use value::ApproxValue;
