#pragma once

#include <stdexcept>
#include <string>

namespace recall {

/// Raised when a request exceeds what the network can hold: more memories
/// than unique active sites (or site combinations), or more memories than
/// distinct level vectors of the given size.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recall
