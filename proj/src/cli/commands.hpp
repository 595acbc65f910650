#pragma once

#include <ostream>

#include "ftt/cli.hpp"

namespace ftt::cli {

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_semigroup_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bessel_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_probe_gftt2(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ftt::cli
