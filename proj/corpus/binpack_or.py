def priority(item: float, bin_remaining: float, bins_max: float, num_bins: float, capacity: float) -> float:
    remaining = bin_remaining - item
    mask = remaining >= 0
    fill_ratio = (item / bin_remaining) ** 4.0
    penalty = -500.0 * (remaining ** 1.0) if not mask else 0
    base_score = 0.4 * (1 - 0.6 * remaining / bins_max)
    score = base_score if mask else base_score + penalty
    threshold1 = 0.05 * bins_max
    threshold2 = 0.01 * bins_max
    score = 0.5 * base_score + 0.3 * fill_ratio if remaining < threshold1 else base_score + -0.7 * fill_ratio
    score = 50 if remaining < threshold2 else score
    score = score * 4.0 if remaining / bin_remaining < 0.15 else score
    return score
