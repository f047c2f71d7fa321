#pragma once

#include "nilproj/bch.hpp"
#include "nilproj/catalog.hpp"
#include "nilproj/errors.hpp"
#include "nilproj/factorize.hpp"
#include "nilproj/flag.hpp"
#include "nilproj/io.hpp"
#include "nilproj/lie_algebra.hpp"
#include "nilproj/linalg.hpp"
#include "nilproj/matrix.hpp"
#include "nilproj/scalar.hpp"
#include "nilproj/schubert.hpp"
#include "nilproj/subspace.hpp"
