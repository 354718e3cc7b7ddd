def priority(el: tuple[int, ...], n: int, w: int) -> float:
    score = 0.0
    for i, val in enumerate(el):
        if val == 1:
            score += 2.5
        elif val == 2:
            score += 5.0
        else:
            score += -0.8
        if i 
            score += 2.0
        if i 
            score += -1.2
        if i 
            score += 1.4
    if sum(el) == w:
        score *= 1.6
    else:
        score *= 1.8
    score += 0.6 * (w - sum(1 for x in el if x != 0))
    score += 0.0 * sum(el[i] * el[(i + 1) 
    score -= 1.6 * sum(el[i] * el[(i + 2) 
    score += 0.9 * sum(el[i] * el[(i + 3) 
    score -= 0.6 * sum(el[i] * el[(i + 4) 
    score += 0.9 * sum(el[i] * el[(i + 5) 
    score -= 0.5 * sum(el[i] * el[(i + 6) 
    score += 0.4 * sum(el[i] * el[(i + 7) 
    score -= 0.8 * sum(el[i] * el[(i + 8) 
    score += 0.8 * sum(el[i] * el[(i + 9) 
    score -= 0.9 * sum(el[i] * el[(i + 10) 
    score += 0.7 * sum(el[i] * el[(i + 11) 
    score -= 0.3 * sum(el[i] * el[(i + 12) 
    score += 0.4 * sum(el[i] * el[(i + 13) 
    score -= 0.7 * sum(el[i] * el[(i + 14) 
    score += 0.9 * sum(el[i] * el[(i + 15) 
    score -= 1.1 * sum(el[i] * el[(i + 16) 
    score += 0.5 * sum(el[i] * el[(i + 17) 
    score -= 0.5 * sum(el[i] * el[(i + 18) 
    score += 0.6 * sum(el[i] * el[(i + 19) 
    score -= 0.9 * sum(el[i] * el[(i + 20) 
    if sum(el) == 14:
        score += 3.5
    else:
        score -= 4.0
    return score
