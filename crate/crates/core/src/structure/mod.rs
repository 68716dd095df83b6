//! Path classification, configuration detection and sponsor forests.

pub mod configs;
pub mod paths;
pub mod sponsor;

pub use configs::{find_configurations, first_configuration, ConfigKind, Configuration};
pub use paths::{classify_paths, vertex_signature, KPath, PathClassification, VertexSignature, Walk};
pub use sponsor::{
    build_sponsorship, build_sponsorship_relaxed, sponsorship_for_audit, SponsorAssignment, SponsorMode, TwoPathSponsor,
};
