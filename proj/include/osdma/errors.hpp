// SPDX-License-Identifier: Apache-2.0
//
// osdma - opportunistic scheduling and beamforming for MIMO-SDMA downlinks
// Copyright (C) 2026 The osdma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef OSDMA_ERRORS_HPP
#define OSDMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace osdma
{
    enum class ErrorCode
    {
        InvalidArgument = 1, // bad dimensions, indices, config values
        Domain,              // argument outside a formula's validity domain
        DegenerateDraw,      // measure-zero singular channel/beam realisation
        NotPositiveDefinite,
        NoConvergence,
        NoSignChange,
        AllTrialsDegenerate,
        Io,
    };

    const char *error_code_name(ErrorCode code) noexcept;

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
    };

    // Raised by the quadrature when the refinement cap is hit. Carries the best
    // estimate so callers can decide whether it is good enough.
    class QuadratureError : public Error
    {
    public:
        QuadratureError(double best_estimate, double achieved_rel_tol, const std::string &what)
            : Error(ErrorCode::NoConvergence, what), best_estimate_(best_estimate), achieved_rel_tol_(achieved_rel_tol) {}

        double best_estimate() const noexcept { return best_estimate_; }
        double achieved_rel_tol() const noexcept { return achieved_rel_tol_; }

    private:
        double best_estimate_;
        double achieved_rel_tol_;
    };
}

#endif
