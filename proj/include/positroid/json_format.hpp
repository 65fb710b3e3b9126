#pragma once

#include <json.hpp>

#include "positroid/basis_family.hpp"
#include "positroid/minors.hpp"
#include "positroid/necklace.hpp"
#include "positroid/oracle.hpp"

namespace positroid {

/// {n, k, perm, col, entries}: both encodings of one positroid.
nlohmann::json positroid_json(const DecoratedPermutation& p);
nlohmann::json basis_family_json(const BasisFamily& family);
nlohmann::json trace_json(const MinorTrace& trace);
nlohmann::json report_json(const VerificationReport& report);

}  // namespace positroid
