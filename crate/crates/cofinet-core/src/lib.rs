//! Coarse-to-fine camouflaged-object segmentation on a self-contained CPU
//! tensor engine.
//!
//! The crate is organized bottom-up:
//!
//! - [`tensor`]: a rank-4 dense array with reverse-mode autodiff, plus the
//!   primitive ops (convolution, resizing, pooling, reductions) everything
//!   else is built from.
//! - [`nn`], [`optim`], [`gradcheck`]: layers, Adam, and a finite-difference
//!   gradient checker.
//! - [`encoder`], [`msfi`], [`mskm`], [`decoders`]: the model blocks — a
//!   small pyramid encoder, multi-scale feature integration, selective-kernel
//!   feature extraction, and the coarse/fine/final decoding paths.
//! - [`losses`], [`metrics`]: supervision terms and the four segmentation
//!   quality measures (MAE, S-measure, adaptive E-measure, adaptive F-beta).
//! - [`dataio`]: PPM/PGM readers and writers, dataset manifests, and a
//!   deterministic synthetic-camouflage generator.
//! - [`model`], [`train`], [`evalrun`], [`config`], [`checkpoint`]: pipeline
//!   assembly, the training loop, evaluation/inference, configuration, and
//!   checkpoint serialization.

pub mod checkpoint;
pub mod config;
pub mod dataio;
pub mod decoders;
pub mod encoder;
pub mod error;
pub mod evalrun;
pub mod gradcheck;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod msfi;
pub mod mskm;
pub mod nn;
pub mod optim;
pub mod tensor;
pub mod train;

pub use error::{Error, Result};
pub use tensor::{no_grad, Scalar, Shape, Tensor};
