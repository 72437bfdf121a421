//! Universe graphs, community templates, and the household expansion.

mod household;
mod io;
mod simple;
mod template;
mod universe;

pub use household::{
    contract_to_universe, expand_household, validate_household, CommunityInfo, HouseholdGraph,
    ValidationReport, Violation,
};
pub use io::{read_community_map, read_edge_list, write_community_map, write_edge_list};
pub use simple::{NodeId, SimpleGraph};
pub use template::{CommunityTemplate, CustomTemplate, MAX_CUSTOM_TEMPLATE};
pub use universe::{
    sample_poisson_degrees, sample_universe_configuration_model, DegreeSequence, UniverseGraph,
    DEFAULT_CONFIG_MODEL_RETRIES,
};
