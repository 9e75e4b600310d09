#pragma once

/**
 * @file commands.hpp
 * @brief The seqlab subcommands as functions returning a rendered document.
 *
 * Each command fills both renderings; the driver prints one of them. Input
 * errors propagate as exceptions, failed verifications set ok = false.
 */

#include "seqlab/identity.hpp"
#include "seqlab/render.hpp"

#include <optional>
#include <string>

namespace seqlab {

struct OutputDocument {
    bool ok = true;
    json payload;
    std::string text;
};

/// Relative tolerance for the Binet-versus-exact comparison.
inline constexpr double kBinetAgreement = 1e-8;

OutputDocument cmd_terms(int h, int count);
OutputDocument cmd_hadamard(const std::string& f, const std::string& g);
OutputDocument cmd_sumsq(int h);

/// n empty: roots and coefficients only; n = -1 selects the table n = 0..20.
OutputDocument cmd_binet(int h, std::optional<long> n);
inline constexpr long kBinetTable = -1;

OutputDocument cmd_check_bfile(const std::string& path, int h, long shift = 0);
OutputDocument cmd_verify_schumacher(long n_max, const SchumacherForm& form = {});

}  // namespace seqlab
