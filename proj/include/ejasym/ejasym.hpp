// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ejasym/coefficients.hpp"
#include "ejasym/errors.hpp"
#include "ejasym/expansions.hpp"
#include "ejasym/io.hpp"
#include "ejasym/oracle.hpp"
#include "ejasym/params.hpp"
#include "ejasym/precision.hpp"
#include "ejasym/rational.hpp"
#include "ejasym/series.hpp"
#include "ejasym/special.hpp"
