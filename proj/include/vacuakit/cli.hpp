#pragma once

namespace vacuakit {

//! Run the command line tool. Returns the process exit code: 0 on success,
//! 1 on a computation error, 2 on a usage error.
int run_cli(int argc, const char* const* argv);

} // namespace vacuakit
