def labels(C, r):
    s2slot, lab, P = r
    spheres=C.sphere_components(); punct=C.punctures()
    sph_of={}
    for i,s in enumerate(spheres):
        for f in s: sph_of[f]=i
    corner={}
    for k,pc in enumerate(punct):
        for (p,fi,v) in pc: corner[(p,fi,v)]=lab[k]
    out={}
    for (p,fi) in C.bnd:
        e=s2slot[sph_of[(p,fi)]]
        out[(p,fi)]=(e,[corner[(p,fi,v)][1] for v in C.faces[(p,fi)]])
    return out
def chirality(C,r):
    res=set()
    for (p,fi),(e,prs) in labels(C,r).items():
        qs=[x for x in prs if x.startswith('q')]
        if len(set(qs))<2: continue
        qL='q%d'%e; qR='q%d'%((e-1)%4)
        k=len(prs)
        # rotate to start at qL
        i=prs.index(qL)
        rot=prs[i:]+prs[:i]
        res.add('LR' if rot[1]==qR else ('L?R' if rot[-1]==qR and rot[1].startswith('u') else str(rot)))
    return res
