#ifndef SERREQ_SESSION_HPP
#define SERREQ_SESSION_HPP

#include <string>

namespace serreq {

enum class OutputFormat { json, text };

/// "json" or "text"; anything else is a usage error.
OutputFormat parse_output_format(const std::string& name);

/// Parses and executes a session document and renders the report.
///
/// A session is a JSON object with a "category" string ("zmod", "proj:n",
/// or "toric"), an optional "ring"/"charts" block for graded backends,
/// "objects" and "morphisms" arrays (each entry named), and a "commands"
/// array executed in order inside the Serre quotient. `category_override`
/// (when nonempty) replaces the document's category selector.
std::string run_session(const std::string& json_text,
                        const std::string& category_override,
                        OutputFormat format);

/// Source text of a built-in demo session: "z-lift", "p1-iso" or
/// "p1xp1-zero". The same documents ship under examples/.
std::string demo_session(const std::string& name);

}  // namespace serreq

#endif  // SERREQ_SESSION_HPP
