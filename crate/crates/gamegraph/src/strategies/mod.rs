//! Presenter and Algorithm strategies.

mod basic;
mod chains;
mod figures;
mod ifil;
mod present;
mod primary;

pub use basic::{first_fit_color, random_scenario, FirstFit, RandomAlgorithm, RandomPresenter};
pub use chains::{ChainPartitioner, CocoOnline};
pub use figures::{Figure2Presenter, Figure5Presenter};
pub use ifil::IfilOnline;
pub use present::{PresentAudit, PresentPresenter};
pub use primary::{
    abs_palette_bound, first_fit_levels, iov3_palette_bound, iov_palette_bound, AbsCore, AbsOnline,
    Decomposition, IovOnline, PrimaryMachine, SecondaryColorer,
};
