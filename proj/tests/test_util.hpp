#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "hsiband/error.hpp"

namespace testutil {

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::mt19937_64 g(std::random_device{}());
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = std::filesystem::temp_directory_path() /
                       ("hsiband_test_" + std::to_string(g()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = std::move(candidate);
        return;
      }
    }
    throw std::runtime_error("could not create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p,
                       const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Runs f and reports the hsiband error category it threw, if any.
template <typename F>
std::optional<hsiband::errc> thrown_errc(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const hsiband::Error& e) {
    return e.code();
  }
}

}  // namespace testutil
