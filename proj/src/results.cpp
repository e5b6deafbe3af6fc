#include "tscbench/results.hpp"

#include "tscbench/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace tscbench {

namespace {

constexpr std::int64_t kUnits = 1000000;
constexpr std::string_view kCountsKey = "train_class_counts=";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view field, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::BadValue, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fixed6(std::int64_t units) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%06lld", static_cast<long long>(units / kUnits),
                static_cast<long long>(units % kUnits));
  return buf;
}

std::vector<std::int64_t> row_units(const Eigen::MatrixXd& p, Eigen::Index i) {
  std::vector<std::int64_t> units(static_cast<std::size_t>(p.cols()));
  std::int64_t sum = 0;
  std::size_t largest = 0;
  for (Eigen::Index c = 0; c < p.cols(); ++c) {
    const auto k = static_cast<std::size_t>(c);
    units[k] = std::llround(std::max(0.0, p(i, c)) * static_cast<double>(kUnits));
    sum += units[k];
    if (units[k] > units[largest]) largest = k;
  }
  units[largest] += kUnits - sum;
  if (units[largest] < 0) throw Error(ErrorCode::BadValue, "probability row cannot be normalised");
  return units;
}

}  // namespace

Eigen::MatrixXd quantise_probabilities(const Eigen::MatrixXd& probabilities) {
  Eigen::MatrixXd out(probabilities.rows(), probabilities.cols());
  for (Eigen::Index i = 0; i < probabilities.rows(); ++i) {
    const auto units = row_units(probabilities, i);
    for (Eigen::Index c = 0; c < probabilities.cols(); ++c) {
      out(i, c) = static_cast<double>(units[static_cast<std::size_t>(c)]) / static_cast<double>(kUnits);
    }
  }
  return out;
}

std::string write_results(const ResultSet& result) {
  result.validate();
  for (std::string_view field : {std::string_view(result.dataset), std::string_view(result.classifier),
                                 std::string_view(result.timestamp)}) {
    if (field.find_first_of(",\n") != std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "header field contains ',' or a newline");
    }
  }
  if (result.parameters.find('\n') != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "parameters contain a newline");
  }
  std::string out;
  out += result.dataset + ',' + result.classifier + ',' + std::to_string(result.resample_id) + ',' +
         result.timestamp + '\n';
  if (!result.parameters.empty()) out += result.parameters + ',';
  out += kCountsKey;
  for (std::size_t c = 0; c < result.train_class_counts.size(); ++c) {
    if (c) out += '|';
    out += std::to_string(result.train_class_counts[c]);
  }
  out += '\n';
  out += shortest(accuracy(result.true_labels, result.predicted)) + ',' + shortest(result.fit_ms) + ',' +
         shortest(result.predict_ms) + '\n';
  for (std::size_t i = 0; i < result.num_cases(); ++i) {
    out += std::to_string(result.true_labels[i]) + ',' + std::to_string(result.predicted[i]) + ',';
    for (std::int64_t u : row_units(result.probabilities, static_cast<Eigen::Index>(i))) out += ',' + fixed6(u);
    out += '\n';
  }
  return out;
}

ResultSet parse_results(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 4) throw Error(ErrorCode::BadValue, "results text has fewer than four lines");

  ResultSet r;
  const auto head = split(lines[0], ',');
  if (head.size() != 4) throw Error(ErrorCode::BadValue, "results header needs four fields");
  r.dataset = head[0];
  r.classifier = head[1];
  r.resample_id = parse_number<std::uint64_t>(head[2], "resample id");
  r.timestamp = head[3];

  const std::string_view meta = lines[1];
  const std::size_t key = meta.rfind(kCountsKey);
  if (key == std::string_view::npos || (key != 0 && meta[key - 1] != ',')) {
    throw Error(ErrorCode::BadValue, "metadata line lacks train_class_counts");
  }
  r.parameters = key == 0 ? std::string() : std::string(meta.substr(0, key - 1));
  for (auto field : split(meta.substr(key + kCountsKey.size()), '|')) {
    r.train_class_counts.push_back(parse_number<std::size_t>(field, "class count"));
  }

  const auto summary = split(lines[2], ',');
  if (summary.size() != 3) throw Error(ErrorCode::BadValue, "summary line needs three fields");
  const auto acc = parse_number<double>(summary[0], "accuracy");
  r.fit_ms = parse_number<double>(summary[1], "fit time");
  r.predict_ms = parse_number<double>(summary[2], "predict time");

  const std::size_t c = r.train_class_counts.size();
  const std::size_t m = lines.size() - 3;
  r.probabilities.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < m; ++i) {
    const auto fields = split(lines[i + 3], ',');
    if (fields.size() != 3 + c || !fields[2].empty()) {
      throw Error(ErrorCode::BadValue, "prediction line " + std::to_string(i + 4) + " is malformed");
    }
    r.true_labels.push_back(parse_number<int>(fields[0], "true label"));
    r.predicted.push_back(parse_number<int>(fields[1], "predicted label"));
    for (std::size_t k = 0; k < c; ++k) {
      r.probabilities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          parse_number<double>(fields[3 + k], "probability");
    }
  }
  r.validate();
  if (accuracy(r.true_labels, r.predicted) != acc) {
    throw Error(ErrorCode::BadValue, "recorded accuracy disagrees with the predictions");
  }
  return r;
}

std::filesystem::path results_path(const std::filesystem::path& results_dir, std::string_view classifier,
                                   std::string_view dataset, std::uint64_t resample_id) {
  return results_dir / classifier / "Predictions" / dataset / ("testResample" + std::to_string(resample_id) + ".csv");
}

void save_results(const std::filesystem::path& path, const ResultSet& result) {
  const std::string text = write_results(result);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + path.parent_path().string() + ": " + ec.message());
  std::ostringstream suffix;
  suffix << ".tmp" << std::hex << std::hash<std::string>{}(text);
  auto tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::Io, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

ResultSet load_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_results(buf.str());
}

}  // namespace tscbench
