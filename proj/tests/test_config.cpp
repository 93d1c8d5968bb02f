// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "pnmr/config.hpp"
#include "pnmr/error.hpp"

namespace pnmr {
namespace {

TEST(Config, AppliesSettings) {
  RunConfig c;
  apply_setting(c, "mode", "SR+SOC");
  apply_setting(c, " temp ", " 408 ");
  apply_setting(c, "nuclei", "1, 3");
  apply_setting(c, "gi", "13C=1.4048236,H=5.5");
  apply_setting(c, "box", "-2,2,-3,3,-1,1");
  apply_setting(c, "direction", "x");
  apply_setting(c, "with-soc-shielding", "true");
  EXPECT_EQ(c.mode, CurrentMode::SR_SOC);
  EXPECT_EQ(c.temperature, 408.0);
  EXPECT_EQ(c.nuclei, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.g_overrides.at("13C"), 1.4048236);
  EXPECT_EQ(c.g_overrides.at("H"), 5.5);
  EXPECT_EQ((*c.box)[3], 3.0);
  EXPECT_EQ(c.direction, 0);
  EXPECT_TRUE(c.with_soc_shielding);
}

TEST(Config, RejectsInvalidValues) {
  RunConfig c;
  EXPECT_THROW(apply_setting(c, "temp", "-1"), Error);
  EXPECT_THROW(apply_setting(c, "temp", "warm"), Error);
  EXPECT_THROW(apply_setting(c, "spin", "0"), Error);
  EXPECT_THROW(apply_setting(c, "nuclei", "0"), Error);
  EXPECT_THROW(apply_setting(c, "box", "1,0,0,1,0,1"), Error);
  EXPECT_THROW(apply_setting(c, "spacing", "0"), Error);
  EXPECT_THROW(apply_setting(c, "soc-magnetizability", "maybe"), Error);
  EXPECT_THROW(apply_setting(c, "colour", "red"), Error);
}

TEST(Config, FileAndHash) {
  const auto path = std::filesystem::temp_directory_path() / "pnmr_config_test.conf";
  {
    std::ofstream out(path);
    out << "# comment\n\ninput = a.fchk\nmode = NR  # trailing\ntemp = 300\nthreads = 3\n";
  }
  RunConfig a;
  load_config_file(a, path.string());
  EXPECT_EQ(a.input, "a.fchk");
  EXPECT_EQ(a.mode, CurrentMode::NR);
  EXPECT_EQ(a.temperature, 300.0);

  RunConfig b = a;
  b.threads = 1;
  b.out_dir = "elsewhere";
  EXPECT_EQ(config_hash(a), config_hash(b));
  b.temperature = 301.0;
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);

  {
    std::ofstream out(path);
    out << "no equals sign here\n";
  }
  RunConfig c;
  try {
    load_config_file(c, path.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedFile);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pnmr
