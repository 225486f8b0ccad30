#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace braidkit {

enum class ItemStatus { Pass, Fail, Skipped };
const char* to_string(ItemStatus s);

struct ItemResult {
  int id = 0;
  std::string title;
  ItemStatus status = ItemStatus::Skipped;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct SuiteOptions {
  /// Directory holding the transcribed table polynomials.
  std::string data_dir;
  int jobs = 1;
  /// d_5 = 16 by exhaustive search; hours.
  bool long_d5 = false;
  /// 2-cable skein polynomials of the two 4-braid words of item 14.
  bool long_exmbr_cable = false;
  /// Item ids to run; empty runs all fourteen.
  std::vector<int> only;
  std::uint64_t seed = 0x5eed;
  /// State budget for each reduction search of item 6.
  std::size_t reduction_budget = 2'000'000;
};

/// Directory compiled in at build time, overridden by BRAIDKIT_DATA_DIR.
std::string default_data_dir();

/// Runs the regression items in order. `on_item` sees each result as soon as
/// it is known. An item that exceeds its time budget fails.
std::vector<ItemResult> run_regression_suite(const SuiteOptions& opt,
                                        const std::function<void(const ItemResult&)>& on_item = {});

/// "[PASS] 7  cable (3_1)_{2,7} ...  (0.41 s)"
std::string format_item(const ItemResult& r);

}  // namespace braidkit
