#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "loopreps_cli/job_runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Batch runner for loop-algebra representation computations"};
  std::string jobPath, jsonPath;
  loopreps::cli::RunOptions opt;
  app.add_option("job", jobPath, "Job file (JSON)")->required();
  app.add_option("--json", jsonPath, "Write the machine-readable report here");
  app.add_flag("--quiet", opt.quiet, "No human-readable output");
  app.add_option("--max-steps", opt.maxSteps, "Default search bound for link-chain")->check(CLI::NonNegativeNumber);
  app.add_option("--order", opt.order, "Default truncation order for series-check")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : loopreps::cli::kMalformedJob;
  }

  std::ifstream in(jobPath, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read job file " << jobPath << "\n";
    return loopreps::cli::kMalformedJob;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const auto res = loopreps::cli::runJob(text.str(), opt, std::cout, std::cerr);
  if (!jsonPath.empty()) {
    std::ofstream os(jsonPath, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << jsonPath << "\n";
      return loopreps::cli::kMalformedJob;
    }
    os << res.report.dump(2) << "\n";
  }
  return res.exitCode;
}
