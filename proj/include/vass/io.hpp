#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vass/certify.hpp"
#include "vass/core.hpp"

namespace vass {

struct VassDocument {
    Vass vass;
    std::vector<std::pair<std::string, Configuration>> configs;

    /// Throws Precondition when no configuration has this name.
    [[nodiscard]] const Configuration& config(const std::string& name) const;
};

/// Grammar, one directive per line, `#` starting a comment:
///   vass dim=<d>
///   state <id> | states <id>...
///   trans <src> <dst> <d integers>
///   config <name> <state> <d nonnegative integers>
/// Errors are ParseError with the 1-based line number.
VassDocument parse_vass(std::string_view text);

/// Canonical form: header, one `states` line, transitions, configurations.
std::string serialize(const Vass& g, const std::vector<std::pair<std::string, Configuration>>& configs = {});
std::string serialize(const VassDocument& doc);

bool is_identifier(std::string_view s);

///   start <state> <d nonnegative integers>
///   word <transition indices>
Run parse_run(std::string_view text, const Vass& g);
std::string serialize_run(const Run& run, const Vass& g);

///   A <n>
///   beam <width> <d integers>
ThinCertificate parse_thin_certificate(std::string_view text, std::size_t dim);
std::string serialize(const ThinCertificate& cert);

/// Thick certificates:
///   A <n>
///   split <n>
///   witness <i1> <i2>                         (optional, 1-based)
///   forward|backward split <k1> <k2> <k3> <k4>
///   forward|backward cycle<i> <indices>       (i = 1..4)
///   forward|backward A <n>                    (optional, defaults to A)
struct ThickDocument {
    ThickCertificate certificate;
    /// 0-based, when given.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ThickDocument parse_thick_certificate(std::string_view text);
std::string serialize(const ThickDocument& doc);

} // namespace vass
