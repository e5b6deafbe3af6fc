#include "tscbench/dataset.hpp"

#include "tscbench/error.hpp"
#include "tscbench/rng.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace tscbench {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_bool(std::string_view token, std::size_t line_no) {
  const auto t = lower(token);
  if (t == "true") return true;
  if (t == "false") return false;
  throw Error(ErrorCode::BadValue, "line " + std::to_string(line_no) + ": expected true/false, got '" +
                                       std::string(token) + "'");
}

double parse_value(std::string_view token, std::size_t line_no) {
  token = trim(token);
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::BadValue,
                "line " + std::to_string(line_no) + ": non-numeric value '" + std::string(token) + "'");
  }
  return value;
}

void append_shortest(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(num_classes(), 0);
  for (int y : labels) ++counts[static_cast<std::size_t>(y)];
  return counts;
}

Dataset Dataset::slice(std::size_t first, std::size_t last) const {
  Dataset out;
  out.name = name;
  out.class_names = class_names;
  out.series = series.middleRows(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(last - first));
  out.labels.assign(labels.begin() + static_cast<std::ptrdiff_t>(first),
                    labels.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

void Dataset::validate() const {
  if (class_names.empty()) throw Error(ErrorCode::EmptyClassNames, "dataset '" + name + "' has no classes");
  if (n_cases() == 0 || series_length() == 0) {
    throw Error(ErrorCode::InvalidArgument, "dataset '" + name + "' is empty");
  }
  if (labels.size() != n_cases()) {
    throw Error(ErrorCode::DimensionMismatch, "label count does not match case count");
  }
  for (int y : labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= class_names.size()) {
      throw Error(ErrorCode::UnknownLabel, "label index " + std::to_string(y) + " out of range");
    }
  }
}

bool Dataset::operator==(const Dataset& other) const {
  return name == other.name && class_names == other.class_names && labels == other.labels &&
         series.rows() == other.series.rows() && series.cols() == other.series.cols() &&
         series == other.series;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t task_seed(std::uint64_t experiment_seed, std::string_view dataset_name,
                        std::uint64_t resample_id) {
  std::uint64_t h = mix64(experiment_seed);
  h = mix64(h ^ fnv1a(dataset_name));
  return mix64(h ^ resample_id);
}

Dataset parse_ts(std::istream& in, std::vector<std::string>* warnings) {
  Dataset out;
  std::optional<bool> equal_length;
  std::optional<std::size_t> declared_length;
  bool have_labels = false;
  bool in_data = false;
  std::size_t line_no = 0;
  std::vector<std::vector<double>> rows;

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == '%') continue;

    if (!in_data) {
      if (line.front() != '@') {
        throw Error(ErrorCode::MissingDataSection,
                    "line " + std::to_string(line_no) + ": case data before @data");
      }
      const auto tokens = split_ws(line.substr(1));
      if (tokens.empty()) continue;
      const auto key = lower(tokens[0]);
      if (key == "data") {
        in_data = true;
      } else if (key == "problemname") {
        if (tokens.size() > 1) out.name = std::string(tokens[1]);
      } else if (key == "classlabel") {
        if (tokens.size() < 2 || !parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::MissingClassLabels, "@classLabel must be 'true' followed by labels");
        }
        for (std::size_t i = 2; i < tokens.size(); ++i) out.class_names.emplace_back(tokens[i]);
        if (out.class_names.empty()) throw Error(ErrorCode::MissingClassLabels, "@classLabel lists no labels");
        have_labels = true;
      } else if (key == "equallength") {
        if (tokens.size() > 1) equal_length = parse_bool(tokens[1], line_no);
      } else if (key == "serieslength") {
        if (tokens.size() > 1) declared_length = static_cast<std::size_t>(parse_value(tokens[1], line_no));
      } else if (key == "timestamps") {
        if (tokens.size() > 1 && parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::UnsupportedFormat, "timestamped series are not supported");
        }
      } else if (key == "univariate") {
        if (tokens.size() > 1 && !parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::UnsupportedFormat, "multivariate series are not supported");
        }
      } else if (key == "missing" || key == "dimension" || key == "dimensions" || key == "targetlabel") {
        // informational
      } else if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) + ": ignoring unknown directive @" +
                            std::string(tokens[0]));
      }
      continue;
    }

    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::BadValue, "line " + std::to_string(line_no) + ": case has no class label");
    }
    const auto values = line.substr(0, colon);
    if (values.find(':') != std::string_view::npos) {
      throw Error(ErrorCode::UnsupportedFormat,
                  "line " + std::to_string(line_no) + ": multivariate cases are not supported");
    }
    if (!have_labels) throw Error(ErrorCode::MissingClassLabels, "no @classLabel declaration before @data");
    const auto label = std::string(trim(line.substr(colon + 1)));
    const auto it = std::find(out.class_names.begin(), out.class_names.end(), label);
    if (it == out.class_names.end()) {
      throw Error(ErrorCode::UnknownLabel,
                  "line " + std::to_string(line_no) + ": label '" + label + "' not declared in @classLabel");
    }

    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = values.find(',', start);
      const auto token = values.substr(start, comma == std::string_view::npos ? values.npos : comma - start);
      if (trim(token) == "?") {
        throw Error(ErrorCode::BadValue, "line " + std::to_string(line_no) + ": missing values are not supported");
      }
      row.push_back(parse_value(token, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::RaggedSeries,
                  "line " + std::to_string(line_no) + ": series of length " + std::to_string(row.size()) +
                      (equal_length.value_or(false) ? " under @equalLength true" : "") + ", expected " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    out.labels.push_back(static_cast<int>(it - out.class_names.begin()));
  }

  if (!in_data) throw Error(ErrorCode::MissingDataSection, "no @data line");
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "no cases after @data");
  const std::size_t n = rows.front().size();
  if (declared_length && equal_length.value_or(false) && *declared_length != n) {
    throw Error(ErrorCode::RaggedSeries, "@seriesLength " + std::to_string(*declared_length) +
                                             " but cases have length " + std::to_string(n));
  }
  out.series.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), out.series.data() + i * n);
  }
  return out;
}

Dataset parse_ts(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return parse_ts(in, warnings);
}

Dataset load_ts(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return parse_ts(in, warnings);
}

std::string write_ts(const Dataset& d) {
  if (d.class_names.empty()) throw Error(ErrorCode::EmptyClassNames, "cannot write a dataset without classes");
  d.validate();
  for (const auto& c : d.class_names) {
    if (c.empty() || c.find_first_of(" \t\r\n:,") != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "class name '" + c + "' cannot be written to a .ts file");
    }
  }
  std::string out;
  out += "@problemName " + (d.name.empty() ? std::string("unnamed") : d.name) + "\n";
  out += "@timeStamps false\n@missing false\n@univariate true\n@equalLength true\n";
  out += "@seriesLength " + std::to_string(d.series_length()) + "\n";
  out += "@classLabel true";
  for (const auto& c : d.class_names) out += " " + c;
  out += "\n@data\n";
  for (std::size_t i = 0; i < d.n_cases(); ++i) {
    const auto row = d.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      append_shortest(out, row[j]);
    }
    out += ':';
    out += d.class_names[static_cast<std::size_t>(d.labels[i])];
    out += '\n';
  }
  return out;
}

std::pair<Dataset, Dataset> stratified_resample(const Dataset& train, const Dataset& test,
                                                const ResamplePlan& plan) {
  if (train.class_names != test.class_names) {
    throw Error(ErrorCode::ClassMismatch, "train and test declare different class labels");
  }
  if (train.series_length() != test.series_length()) {
    throw Error(ErrorCode::DimensionMismatch, "train and test series lengths differ");
  }
  const auto train_counts = train.class_counts();
  const auto test_counts = test.class_counts();
  for (std::size_t c = 0; c < train_counts.size(); ++c) {
    if (test_counts[c] > 0 && train_counts[c] == 0) {
      throw Error(ErrorCode::ClassMismatch, "class '" + train.class_names[c] + "' appears in test but not in train");
    }
  }
  if (plan.resample_id == 0) return {train, test};

  const std::size_t m_train = train.n_cases();
  const std::size_t m_total = m_train + test.n_cases();
  auto pooled_row = [&](std::size_t i) { return i < m_train ? train.row(i) : test.row(i - m_train); };
  auto pooled_label = [&](std::size_t i) { return i < m_train ? train.labels[i] : test.labels[i - m_train]; };

  Rng rng(task_seed(plan.experiment_seed, train.name, plan.resample_id));
  std::vector<char> to_train(m_total, 0);
  for (std::size_t c = 0; c < train_counts.size(); ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m_total; ++i) {
      if (pooled_label(i) == static_cast<int>(c)) members.push_back(i);
    }
    rng.shuffle(members.begin(), members.end());
    for (std::size_t k = 0; k < train_counts[c]; ++k) to_train[members[k]] = 1;
  }

  auto build = [&](const Dataset& like, bool want_train) {
    Dataset out;
    out.name = like.name;
    out.class_names = like.class_names;
    out.series.resize(static_cast<Eigen::Index>(like.n_cases()), static_cast<Eigen::Index>(like.series_length()));
    std::size_t r = 0;
    for (std::size_t i = 0; i < m_total; ++i) {
      if (static_cast<bool>(to_train[i]) != want_train) continue;
      const auto src = pooled_row(i);
      std::copy(src.begin(), src.end(), out.series.data() + r * like.series_length());
      out.labels.push_back(pooled_label(i));
      ++r;
    }
    return out;
  };
  return {build(train, true), build(test, false)};
}

}  // namespace tscbench
