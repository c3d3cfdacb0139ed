#pragma once

#include <string>

namespace fockbundle {

/// The two local trivializations of the (classical or quantum) Hopf bundle.
enum class ChartLabel { I, II };

inline std::string to_string(ChartLabel label) { return label == ChartLabel::I ? "I" : "II"; }

}  // namespace fockbundle
