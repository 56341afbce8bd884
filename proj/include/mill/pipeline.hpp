#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mill/config.hpp"

namespace mill {

// A stage died; the message carries the stage name. Exit code 3 at the CLI.
struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error("stage " + stage + ": " + what), stage_name(stage) {}
  std::string stage_name;
};

inline constexpr std::string_view kToolVersion = "1.0.0";

// Runs segment -> subword -> docalign -> sentalign -> filter -> pivot ->
// stats over every configured language and writes all artifacts plus
// manifest.json under cfg.output_dir. Outputs are staged under partial/
// and promoted only when every stage succeeded, so a failed run leaves its
// debris isolated. Returns the manifest. Apart from the created_at field,
// reruns on identical inputs produce byte-identical artifacts, whatever
// cfg.jobs says.
nlohmann::json run_pipeline(const PipelineConfig& cfg);

}  // namespace mill
