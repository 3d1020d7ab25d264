#ifndef NRDL_MODEL_IO_HPP_
#define NRDL_MODEL_IO_HPP_

#include <string>

#include "nrdl/trainer.hpp"

namespace nrdl {

// Versioned text model format. Header `NRDL 1 d K C`, then D row-major (one
// row per line), then W, then `key=value` metadata lines. Values are printed
// with 17 significant digits so save/load round-trips bit-exactly.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

std::string model_to_string(const TrainedModel& model);
TrainedModel model_from_string(const std::string& text);

// Trace CSV with header `iter,objective,residual_P,residual_J`.
void write_trace_csv(const ConvergenceTrace& trace, const std::string& path);
ConvergenceTrace read_trace_csv(const std::string& path);

// Shortest round-trip decimal form of a double (17 significant digits).
std::string format_real(double v);

}  // namespace nrdl

#endif  // NRDL_MODEL_IO_HPP_
