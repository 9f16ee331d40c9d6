use ctrord_core::search::SearchConfig;

pub mod antichain;
pub mod check;
pub mod dichotomy;
pub mod enumerate;
pub mod lemmas;
pub mod matrix;
pub mod recognize;

pub struct Context {
    pub search: SearchConfig,
    pub workers: usize,
}
