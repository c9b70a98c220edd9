pub mod cli;
pub mod oracle;
pub mod complement;
pub mod corpus;
pub mod reversibility;
pub mod code;
pub mod howell;
pub mod poly;
pub mod ring;
pub mod syntax;
