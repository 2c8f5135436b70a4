//! Groebner bases for ideals and submodules, ideal operations, Hilbert series.

pub mod engine;
pub mod hilbert;
pub mod ideal;
pub mod modvec;
pub mod ring;

pub use engine::{EngineStats, GbEngine};
pub use hilbert::{dim_by_independent_sets, hilbert_data, HilbertData, ModuleSeries};
pub use ideal::{buchberger, divide_exact, Ideal};
pub use modvec::{MTerm, ModVec, ModuleExt, ModuleOrder, SchreyerFrame};
pub use ring::GradedRing;
