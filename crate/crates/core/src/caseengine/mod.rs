//! The classification driver: case sorting, the subcase tables, the
//! equal-rank scan, Case II and the sphere presentations.

pub mod case2;
pub mod case3;
pub mod even;
pub mod sphere;
pub mod subsystem;
pub mod tables;

pub use case2::{case2_analyze, Case2Report};
pub use case3::{assign_subcase, enumerate_case3, verify_table6, Subcase, SubcaseLabel, Table6Check, Tables};
pub use even::{even_pair_scan, wallach_membership, wallach_model, Membership};
pub use sphere::sphere_report;
pub use subsystem::{subsystem_type, SubsystemType};
pub use tables::{verify_table2, verify_table2_row, verify_table3, verify_table3_row, verify_table4, verify_table4_row, verify_table5, verify_table5_row};

use crate::error::Result;
use crate::model::{CaseLabel, HomModel};

pub fn classify_case(model: &HomModel) -> Result<CaseLabel> {
    model.classify_case()
}
