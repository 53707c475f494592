//! The Klein bottle computation and the reduction of higher genus to it.

pub mod algebra;
pub mod certificate;
pub mod golden;
pub mod pipeline;
pub mod projection;

pub use certificate::{Certificate, Checkpoint, ExpectedSource, Status, Verdict};
pub use pipeline::{certify_klein, certify_surface, CertifyOptions};
