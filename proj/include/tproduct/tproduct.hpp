#pragma once

#include <tproduct/dft.hpp>
#include <tproduct/errors.hpp>
#include <tproduct/factorizations.hpp>
#include <tproduct/norms_prox.hpp>
#include <tproduct/structure.hpp>
#include <tproduct/tensor3.hpp>
#include <tproduct/tprod_ops.hpp>
