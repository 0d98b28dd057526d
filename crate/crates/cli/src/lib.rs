//! Front end for `monodromy-core`: per-triple reports, theorem verification,
//! bulk surveys and DOT export.

pub mod report;
pub mod survey;

pub use report::analyze_report;
pub use survey::{survey_rows, SurveyFormat, SurveyRow};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const RESOURCE_LIMIT: i32 = 3;
    pub const IO: i32 = 4;
}

/// Exit code for a core error raised while handling a valid command line.
pub fn exit_code_for(err: &monodromy_core::Error) -> i32 {
    use monodromy_core::Error;
    match err {
        Error::InvalidTriple(..) => exit::USAGE,
        Error::SizeExceeded { .. } => exit::RESOURCE_LIMIT,
        _ => exit::VERIFICATION_FAILED,
    }
}

/// Default DOT output path for a reduced triple.
pub fn default_dot_path(t: &monodromy_core::Triple) -> String {
    format!("dessin_{}_{}_{}.dot", t.p0(), t.p1(), t.p2())
}
