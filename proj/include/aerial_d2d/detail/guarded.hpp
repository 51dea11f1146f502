// SPDX-License-Identifier: Apache-2.0
//
// aerial-d2d: stochastic-geometry toolkit for D2D-enabled aerial networks
// Copyright (C) 2026 The aerial-d2d authors
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

#ifndef AERIAL_D2D_DETAIL_GUARDED_HPP
#define AERIAL_D2D_DETAIL_GUARDED_HPP

#include "aerial_d2d/specfun.hpp"

#include <exception>
#include <ostream>

namespace aerial_d2d::cli {

template <typename Fn>
int guarded(std::ostream &err, Fn &&body)
{
    try
    {
        return body();
    }
    catch (const ConfigError &e)
    {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const specfun::ConvergenceError &e)
    {
        err << "numerical error: " << e.what() << " (estimate " << e.estimate() << ", error bound "
            << e.error_bound() << ")\n";
        return kExitConvergence;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace aerial_d2d::cli

#endif
