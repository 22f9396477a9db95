#pragma once

#include <stdexcept>
#include <string>

namespace agrodevs {

/// Invalid scenario, table or sweep input. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written. Maps to CLI exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A goodness-of-fit or summary statistic is undefined for the input
/// (zero observed mean, all observed pairs tied, ...). Maps to exit code 4.
class MetricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace agrodevs
