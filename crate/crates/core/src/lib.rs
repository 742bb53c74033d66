//! Glide trajectory planning and ranking for loss-of-thrust emergencies.
//!
//! The library models a damaged aircraft with a single baseline glide ratio,
//! plans Dubins-style glide paths from an aircraft state to candidate runways,
//! scores the reachable candidates on six safety metrics, and refines the
//! glide-ratio estimate online from recorded sensor streams, replanning when
//! the estimate drifts.

pub mod dubins;
pub mod estimation;
pub mod geodesy;
pub mod metrics;
pub mod performance;
pub mod planner;
pub mod replay;

pub use dubins::{Configuration2D, GlidePath, PathPoint, PathWord, Point2, Segment, SegmentKind, TurnDirection};
pub use estimation::{EstimatorConfig, GlideEstimate, SensorSample};
pub use geodesy::{GeoPosition, LocalFrame, LocalPoint};
pub use metrics::{CandidateSet, NormalizedMetrics, RawMetrics, SafetyReport};
pub use performance::{BankAngle, DragConfig, PerformanceModel};
pub use planner::{Classification, PlanRequest, PlanResult, RunwaySpec};
pub use replay::{LoopConfig, LoopEvent, LoopEventKind};
