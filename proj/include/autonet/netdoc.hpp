#pragma once

#include <stdexcept>
#include <string>

#include "autonet/network.hpp"
#include "autonet/synthesis.hpp"

namespace autonet {

/// Malformed network/arrangement document.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Network documents are JSON:
///   {"format":"table","q":2,"n":2,"table":["00","10","01","11"]}
///   {"format":"rules","q":2,"n":2,"rules":["!x1","!x2"]}     (q = 2 only)
/// Table entries are digit strings in canonical index order, node 1 first.
Network parse_network_document(const std::string& text);
std::string network_document(const Network& f);  ///< canonical (table) form

Network load_network(const std::string& path);
void save_network(const Network& f, const std::string& path);

/// Arrangement documents:
///   {"n":3,"cubes":[{"x1":1},{"x3":0}]}
/// Specs add a free-choice map:
///   {"n":3,"cubes":[...],"free_choice":{"x2":"negate"}}
Arrangement parse_arrangement_document(const std::string& text);
Arrangement load_arrangement(const std::string& path);
ArrangementNetworkSpec parse_spec_document(const std::string& text);
ArrangementNetworkSpec load_spec(const std::string& path);
std::string spec_document(const ArrangementNetworkSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace autonet
