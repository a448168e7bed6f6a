#pragma once

namespace polyverify {

// Worker count: POLYVERIFY_WORKERS from the environment, else the OpenMP
// default. set_workers(0) restores the default.
int default_workers();
void set_workers(int n);
void apply_env_workers();

}  // namespace polyverify
