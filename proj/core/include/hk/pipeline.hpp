#pragma once

#include "hk/report.hpp"

#include <filesystem>

namespace hk {

/// Executes the construct/bridge/profile steps declared in a JSON pipeline
/// file.  Steps run in order on a current structure; intermediate HSF
/// artifacts are written into `workdir`.  A failing step aborts with its
/// index in the report.  Deterministic given the same inputs.
///
/// Step vocabulary (objects in the "steps" array):
///   {"op":"source","name":<catalog name>} | {"op":"source","path":<hsf>}
///   {"op":"quotient","p":<prime>,"subgroup-order":<d>}
///   {"op":"to-system"}                  hypersystem of the current table
///   {"op":"profile","ideal":"null"|"null+size>=K"}
///   {"op":"recover"}                    back to a hyper table
///   {"op":"diff","name":<catalog name>} exact table comparison
///   {"op":"write","out":<file name>}    write the current structure
struct PipelineResult {
    int exit_code = 0;
    json report;
};
PipelineResult run_pipeline(const std::filesystem::path& script,
                            const std::filesystem::path& workdir);

} // namespace hk
