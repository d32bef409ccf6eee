#include "hsiband/cube.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace hsiband {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(const std::string& s, long long& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = begin + t.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc{} && res.ptr == end;
}

}  // namespace

Cube::Cube(int bands_, int rows_, int cols_,
           std::vector<std::uint16_t> samples_)
    : bands(bands_), rows(rows_), cols(cols_), samples(std::move(samples_)) {
  if (bands < 1 || rows < 1 || cols < 1)
    fail(errc::empty_cube, "cube dimensions must all be >= 1");
  const auto expected =
      static_cast<std::size_t>(bands) * rows * cols;
  if (samples.size() != expected) {
    std::ostringstream msg;
    msg << "cube sample count " << samples.size() << " != bands*rows*cols = "
        << expected;
    fail(errc::shape_mismatch, msg.str());
  }
}

std::span<const std::uint16_t> Cube::band(int b) const {
  if (b < 0 || b >= bands) {
    std::ostringstream msg;
    msg << "band index " << b << " out of range [0, " << bands << ")";
    fail(errc::invalid_spec, msg.str());
  }
  return {samples.data() + static_cast<std::size_t>(b) * pixels_per_band(),
          pixels_per_band()};
}

GroundTruthMap::GroundTruthMap(int rows_, int cols_,
                               std::vector<std::uint16_t> labels_)
    : rows(rows_), cols(cols_), labels(std::move(labels_)) {
  if (rows < 1 || cols < 1)
    fail(errc::shape_mismatch, "ground truth dimensions must be >= 1");
  if (labels.size() != static_cast<std::size_t>(rows) * cols)
    fail(errc::shape_mismatch, "ground truth label count != rows*cols");
  for (const auto v : labels) {
    if (v > kMaxLabel)
      fail(errc::label_out_of_range,
           "ground truth label " + std::to_string(v) + " outside [0, 16]");
  }
}

std::filesystem::path raw_path_for(const std::filesystem::path& header_path) {
  if (header_path.extension() == ".hdr") {
    auto p = header_path;
    p.replace_extension(".raw");
    return p;
  }
  auto p = header_path;
  p += ".raw";
  return p;
}

Cube load_cube(const std::filesystem::path& header_path) {
  std::ifstream hdr(header_path);
  if (!hdr)
    fail(errc::missing_file, "cannot open header " + header_path.string());

  static constexpr std::array<const char*, 6> kKeys = {
      "samples", "lines", "bands", "data type", "interleave", "byte order"};

  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(hdr, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      fail(errc::malformed_header, "header line without '=': " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (std::find_if(kKeys.begin(), kKeys.end(), [&](const char* k) {
          return key == k;
        }) == kKeys.end())
      fail(errc::malformed_header, "unknown header key: " + key);
    if (!kv.emplace(key, value).second)
      fail(errc::malformed_header, "duplicate header key: " + key);
  }
  for (const char* k : kKeys) {
    if (!kv.count(k))
      fail(errc::malformed_header, std::string("missing header key: ") + k);
  }

  const auto get_int = [&](const char* key) {
    long long v = 0;
    if (!parse_int(kv.at(key), v))
      fail(errc::malformed_header,
           std::string("non-integer value for key: ") + key);
    return v;
  };

  const long long samples_n = get_int("samples");
  const long long lines_n = get_int("lines");
  const long long bands_n = get_int("bands");
  const long long data_type = get_int("data type");
  const long long byte_order = get_int("byte order");
  const std::string interleave = kv.at("interleave");

  if (samples_n < 1 || lines_n < 1 || bands_n < 1)
    fail(errc::malformed_header, "header dimensions must be >= 1");
  if (data_type != 12)
    fail(errc::unsupported_format,
         "data type " + std::to_string(data_type) + " (only 12 = u16)");
  if (interleave != "bsq")
    fail(errc::unsupported_format, "interleave " + interleave + " (only bsq)");
  if (byte_order != 0)
    fail(errc::unsupported_format,
         "byte order " + std::to_string(byte_order) + " (only 0 = LE)");

  const auto raw_path = raw_path_for(header_path);
  std::ifstream raw(raw_path, std::ios::binary);
  if (!raw)
    fail(errc::missing_file, "cannot open raw file " + raw_path.string());

  const std::size_t count =
      static_cast<std::size_t>(bands_n) * lines_n * samples_n;
  std::vector<char> bytes((std::istreambuf_iterator<char>(raw)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() != 2 * count) {
    std::ostringstream msg;
    msg << "raw file holds " << bytes.size() << " bytes, expected "
        << 2 * count;
    fail(errc::truncated_data, msg.str());
  }

  std::vector<std::uint16_t> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto lo = static_cast<unsigned char>(bytes[2 * i]);
    const auto hi = static_cast<unsigned char>(bytes[2 * i + 1]);
    data[i] = static_cast<std::uint16_t>(lo | (hi << 8));
  }

  return Cube(static_cast<int>(bands_n), static_cast<int>(lines_n),
              static_cast<int>(samples_n), std::move(data));
}

void save_cube(const Cube& cube, const std::filesystem::path& header_path) {
  std::ofstream hdr(header_path);
  if (!hdr)
    fail(errc::missing_file, "cannot write header " + header_path.string());
  hdr << "samples = " << cube.cols << "\n"
      << "lines = " << cube.rows << "\n"
      << "bands = " << cube.bands << "\n"
      << "data type = 12\n"
      << "interleave = bsq\n"
      << "byte order = 0\n";
  hdr.close();

  const auto raw_path = raw_path_for(header_path);
  std::ofstream raw(raw_path, std::ios::binary);
  if (!raw)
    fail(errc::missing_file, "cannot write raw file " + raw_path.string());
  std::vector<char> bytes(cube.samples.size() * 2);
  for (std::size_t i = 0; i < cube.samples.size(); ++i) {
    bytes[2 * i] = static_cast<char>(cube.samples[i] & 0xFF);
    bytes[2 * i + 1] = static_cast<char>(cube.samples[i] >> 8);
  }
  raw.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

GroundTruthMap load_ground_truth(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::missing_file, "cannot open " + path.string());

  std::vector<std::uint16_t> labels;
  int rows = 0;
  long long cols = -1;
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() && in.eof()) break;  // trailing newline
    long long row_cols = 0;
    std::size_t pos = 0;
    while (pos <= stripped.size()) {
      const auto comma = stripped.find(',', pos);
      const std::string tok =
          stripped.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos);
      long long v = 0;
      if (!parse_int(tok, v))
        fail(errc::parse_error, "bad ground truth value: '" + tok + "'");
      if (v < 0 || v > kMaxLabel)
        fail(errc::label_out_of_range,
             "ground truth label " + std::to_string(v) + " outside [0, 16]");
      labels.push_back(static_cast<std::uint16_t>(v));
      ++row_cols;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cols < 0)
      cols = row_cols;
    else if (row_cols != cols)
      fail(errc::shape_mismatch, "ragged ground truth rows");
    ++rows;
  }
  if (rows == 0 || cols < 1)
    fail(errc::parse_error, "empty ground truth file " + path.string());
  return GroundTruthMap(rows, static_cast<int>(cols), std::move(labels));
}

void save_ground_truth(const GroundTruthMap& gt,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(errc::missing_file, "cannot write " + path.string());
  for (int r = 0; r < gt.rows; ++r) {
    for (int c = 0; c < gt.cols; ++c) {
      if (c) out << ',';
      out << gt.at(r, c);
    }
    out << '\n';
  }
}

void require_same_shape(const Cube& cube, const GroundTruthMap& gt) {
  if (cube.rows != gt.rows || cube.cols != gt.cols) {
    std::ostringstream msg;
    msg << "cube is " << cube.rows << "x" << cube.cols << " but ground truth is "
        << gt.rows << "x" << gt.cols;
    fail(errc::shape_mismatch, msg.str());
  }
}

}  // namespace hsiband
