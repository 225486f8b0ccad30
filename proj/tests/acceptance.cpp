// One line per regression item; exit status 1 if any item fails.
#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "braidkit/regression_suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"regression items"};
  braidkit::SuiteOptions opt;
  opt.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--item", opt.only, "items to run")->check(CLI::Range(1, 14));
  app.add_option("--data", opt.data_dir);
  app.add_flag("--long-d5", opt.long_d5);
  app.add_flag("--long-exmbr-cable", opt.long_exmbr_cable);
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  braidkit::run_regression_suite(opt, [&](const braidkit::ItemResult& r) {
    std::cout << "item " << r.id << ": " << braidkit::to_string(r.status) << "  " << r.title << "  ("
              << r.seconds << " s)\n    " << r.detail << std::endl;
    failed += r.status == braidkit::ItemStatus::Fail;
  });
  return failed == 0 ? 0 : 1;
}
