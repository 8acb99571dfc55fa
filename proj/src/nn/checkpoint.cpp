#include "goalforge/nn/checkpoint.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace goalforge {

namespace {

constexpr const char* kMagic = "goalforge-tensors v1";

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

TensorWriter::TensorWriter(std::ostream& out) : out_(out) { out_ << kMagic << "\n"; }

TensorWriter::~TensorWriter() {
  if (!finished_) finish();
}

void TensorWriter::add(const std::string& name, const Eigen::MatrixXd& tensor) {
  if (finished_) throw CheckpointError("TensorWriter: add after finish");
  if (name.empty() || name.find_first_of(" \n\t") != std::string::npos) {
    throw CheckpointError("TensorWriter: bad tensor name");
  }
  out_ << "tensor " << name << " " << tensor.rows() << " " << tensor.cols() << "\n";
  for (Eigen::Index r = 0; r < tensor.rows(); ++r) {
    for (Eigen::Index c = 0; c < tensor.cols(); ++c) {
      if (c) out_ << " ";
      out_ << format_value(tensor(r, c));
    }
    out_ << "\n";
  }
}

void TensorWriter::add(const std::string& name, const Eigen::VectorXd& tensor) {
  add(name, Eigen::MatrixXd(tensor));
}

void TensorWriter::add_scalar(const std::string& name, double value) {
  Eigen::MatrixXd t(1, 1);
  t(0, 0) = value;
  add(name, t);
}

void TensorWriter::finish() {
  out_ << "end\n";
  finished_ = true;
}

TensorReader::TensorReader(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw CheckpointError("tensor file: bad or missing header");
  }
  while (std::getline(in, line)) {
    if (line == "end") return;
    std::istringstream header(line);
    std::string keyword, name;
    long rows = -1, cols = -1;
    header >> keyword >> name >> rows >> cols;
    if (keyword != "tensor" || name.empty() || rows < 0 || cols < 0 || header.fail()) {
      throw CheckpointError("tensor file: malformed tensor header: " + line);
    }
    if (tensors_.count(name)) throw CheckpointError("tensor file: duplicate tensor " + name);
    Eigen::MatrixXd t(rows, cols);
    for (long r = 0; r < rows; ++r) {
      if (!std::getline(in, line)) throw CheckpointError("tensor file: truncated tensor " + name);
      std::istringstream row(line);
      for (long c = 0; c < cols; ++c) {
        if (!(row >> t(r, c))) {
          throw CheckpointError("tensor file: bad value in tensor " + name);
        }
      }
    }
    tensors_.emplace(std::move(name), std::move(t));
  }
  throw CheckpointError("tensor file: missing end marker");
}

const Eigen::MatrixXd& TensorReader::get(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw CheckpointError("tensor file: missing tensor " + name);
  return it->second;
}

Eigen::VectorXd TensorReader::get_vector(const std::string& name) const {
  const Eigen::MatrixXd& t = get(name);
  if (t.cols() != 1) throw CheckpointError("tensor file: " + name + " is not a vector");
  return t.col(0);
}

double TensorReader::get_scalar(const std::string& name) const {
  const Eigen::MatrixXd& t = get(name);
  if (t.rows() != 1 || t.cols() != 1) {
    throw CheckpointError("tensor file: " + name + " is not a scalar");
  }
  return t(0, 0);
}

}  // namespace goalforge
