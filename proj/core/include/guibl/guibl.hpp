#pragma once

#include "guibl/augment.hpp"
#include "guibl/config.hpp"
#include "guibl/corpus.hpp"
#include "guibl/embeddings.hpp"
#include "guibl/error.hpp"
#include "guibl/index.hpp"
#include "guibl/mapping.hpp"
#include "guibl/metrics.hpp"
#include "guibl/preprocess.hpp"
#include "guibl/ranking.hpp"
#include "guibl/scenario.hpp"
#include "guibl/wilcoxon.hpp"
