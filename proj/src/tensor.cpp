#include "bhhl/tensor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bhhl {

namespace {
constexpr std::size_t kMaxDenseEntries = 1u << 30;  // 2^30 entries (~16 GiB complex)
}

CoefficientTensor::CoefficientTensor(int m, int n, ScalarField field,
                                     std::vector<std::complex<double>> entries)
    : m_(m), n_(n), field_(field), entries_(std::move(entries)) {
  if (m_ < 1 || n_ < 1) {
    throw tensor_format_error("tensor dimensions must satisfy m >= 1, n >= 1");
  }
  const std::size_t expect = dense_size(m_, n_);
  if (entries_.size() != expect) {
    std::ostringstream os;
    os << "tensor entries count " << entries_.size() << " does not match n^m = " << expect
       << " (n = " << n_ << ", m = " << m_ << ")";
    throw tensor_format_error(os.str());
  }
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw tensor_format_error("tensor entries must all be finite");
    }
    if (field_ == ScalarField::REAL && e.imag() != 0.0) {
      throw tensor_format_error("real tensor holds a non-real entry");
    }
  }
}

CoefficientTensor CoefficientTensor::real_tensor(int m, int n, std::vector<double> entries) {
  std::vector<std::complex<double>> c(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    c[i] = entries[i];
  }
  return CoefficientTensor(m, n, ScalarField::REAL, std::move(c));
}

bool CoefficientTensor::is_zero() const {
  for (const auto& e : entries_) {
    if (e != std::complex<double>(0.0, 0.0)) {
      return false;
    }
  }
  return true;
}

std::vector<double> CoefficientTensor::real_entries() const {
  if (field_ != ScalarField::REAL) {
    throw tensor_format_error("real_entries() called on a complex tensor");
  }
  std::vector<double> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out[i] = entries_[i].real();
  }
  return out;
}

std::size_t CoefficientTensor::dense_size(int m, int n) {
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > kMaxDenseEntries / static_cast<std::size_t>(n)) {
      throw tensor_format_error("dense tensor n^m exceeds the supported size");
    }
    total *= static_cast<std::size_t>(n);
  }
  return total;
}

std::string CoefficientTensor::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  j["n"] = n_;
  j["field"] = to_string(field_);
  j["layout"] = "row-major";
  nlohmann::json arr = nlohmann::json::array();
  if (field_ == ScalarField::REAL) {
    for (const auto& e : entries_) {
      arr.push_back(e.real());
    }
  } else {
    for (const auto& e : entries_) {
      arr.push_back(nlohmann::json::array({e.real(), e.imag()}));
    }
  }
  j["entries"] = std::move(arr);
  return j.dump();
}

CoefficientTensor CoefficientTensor::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw tensor_format_error(std::string("tensor JSON parse failure: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("field") ||
        !j.contains("entries")) {
      throw tensor_format_error(
          "tensor JSON must be an object with keys m, n, field, entries");
    }
    if (j.contains("layout") && j["layout"].get<std::string>() != "row-major") {
      throw tensor_format_error("tensor layout must be \"row-major\"");
    }
    const int m = j["m"].get<int>();
    const int n = j["n"].get<int>();
    ScalarField field;
    try {
      field = parse_field(j["field"].get<std::string>());
    } catch (const std::domain_error& e) {
      throw tensor_format_error(e.what());
    }
    if (m < 1 || n < 1) {
      throw tensor_format_error("tensor dimensions must satisfy m >= 1, n >= 1");
    }
    const std::size_t expect = dense_size(m, n);
    const auto& raw = j["entries"];
    if (!raw.is_array() || raw.size() != expect) {
      std::ostringstream os;
      os << "tensor entries count " << (raw.is_array() ? raw.size() : 0)
         << " does not match the expected n^m = " << expect << " (n = " << n << ", m = " << m
         << ")";
      throw tensor_format_error(os.str());
    }
    std::vector<std::complex<double>> entries;
    entries.reserve(expect);
    for (const auto& e : raw) {
      if (field == ScalarField::REAL) {
        if (!e.is_number()) {
          throw tensor_format_error("real tensor entries must be plain numbers");
        }
        entries.emplace_back(e.get<double>(), 0.0);
      } else {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
          throw tensor_format_error("complex tensor entries must be [re, im] pairs");
        }
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
      }
    }
    return CoefficientTensor(m, n, field, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw tensor_format_error(std::string("tensor JSON field error: ") + e.what());
  }
}

CoefficientTensor CoefficientTensor::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw tensor_format_error("cannot open tensor file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void CoefficientTensor::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw tensor_format_error("cannot write tensor file: " + path);
  }
  out << to_json() << "\n";
}

}  // namespace bhhl
