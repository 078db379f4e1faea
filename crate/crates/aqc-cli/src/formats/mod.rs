//! File formats: alist matrices, JSON descriptors and sweeps, result CSV.

pub mod alist;
pub mod csv_out;
pub mod descriptor;
pub mod sweep;

pub use alist::{read_alist, write_alist};
pub use csv_out::{render_csv, CsvRow, CSV_HEADER};
pub use descriptor::{CodeDescriptor, FamilyParams, TOOL_VERSION};
pub use sweep::{parse_range, SweepMode, SweepSpec};
