pub use dncount::*;
