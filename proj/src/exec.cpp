#include "cone/exec.hpp"

namespace cone {

namespace {
Exec g_default = Exec::Parallel;
}

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

}  // namespace cone
