pub mod explicit; pub mod predict; pub mod verify;
