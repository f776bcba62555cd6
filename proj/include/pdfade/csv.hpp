#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdfade::csv {

// Doubles serialized with 12 significant digits; -inf as the literal token
// "-inf". Fields containing comma, quote, CR or LF are quoted RFC-4180 style.
// Rows end with \n.
std::string format_double(double v);
std::string escape(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace pdfade::csv
