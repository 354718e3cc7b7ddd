def priority(el: tuple[int, ...], n: int) -> float:
    score = 0.0
    k = 2
    weight_symmetry = -1.0
    weight_neighbor = 0.2
    antipodal_offset = n // 2
    for i in range(n):
        neighbor1 = el[(i + k) % n]
        neighbor2 = el[(i - k) % n]
        antipodal = el[(i + antipodal_offset) % n]
        symmetry_score = 0.3 if el[i] == antipodal else 0.0
        neighbor_score = 0.2 if neighbor1 == neighbor2 else -0.3
        score += weight_symmetry * symmetry_score + weight_neighbor * neighbor_score
        ops = [
            (el[i] == 1),
            (el[(i - k) % n] == 0),
            (el[(i + k) % n] == 0),
        ]
        condition1 = ops[0] & ops[1] & ops[2]
        score += 0.3 * condition1
        condition2 = (el[i] == antipodal) & (el[(i - k) % n] == el[(i + k) % n])
        score += -2.0 * condition2
        condition3 = (el[i] + el[(i + n // 3) % n]) % 2 == 0
        score += 0.4 * condition3
        score += 0.6 * (el[i] == 1)
        score += -0.1 * abs(el[i] - antipodal)
        score += 0.01 * abs(el[i] - neighbor1)
        score += -0.01 * abs(el[i] - neighbor2)
        score += -0.01 * (el[i] == neighbor1)
        score += 0.0 * (el[i] == neighbor2)
        score += -0.02 * (el[i] == el[(i + k + 1) % n])
        score += 0.01 * abs(el[i] - el[(i + k + 2) % n])
    score += 0.4 * (sum(el) % 2 == 1)
    score *= 4.0
    return score
