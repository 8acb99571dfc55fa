#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace goalforge {

class CheckpointError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named-tensor text format:
//   goalforge-tensors v1
//   tensor <name> <rows> <cols>
//   <rows lines of cols space-separated %.17g values>
//   ...
//   end
// Values round-trip doubles exactly. Vectors are n x 1, scalars 1 x 1.
class TensorWriter {
 public:
  explicit TensorWriter(std::ostream& out);
  ~TensorWriter();

  void add(const std::string& name, const Eigen::MatrixXd& tensor);
  void add(const std::string& name, const Eigen::VectorXd& tensor);
  void add_scalar(const std::string& name, double value);
  void finish();

 private:
  std::ostream& out_;
  bool finished_ = false;
};

class TensorReader {
 public:
  // Parses the whole stream; throws CheckpointError on malformed input.
  explicit TensorReader(std::istream& in);

  bool has(const std::string& name) const { return tensors_.count(name) != 0; }
  const Eigen::MatrixXd& get(const std::string& name) const;
  Eigen::VectorXd get_vector(const std::string& name) const;
  double get_scalar(const std::string& name) const;

 private:
  std::map<std::string, Eigen::MatrixXd> tensors_;
};

}  // namespace goalforge
